"""Pure-NumPy implementations of the numerical hot loops.

:mod:`vacphase.kernels` selects between this module and the compiled
``vacphase._kernels`` extension at import time.  Both expose the same three
functions with identical semantics, so results agree to rounding error and
either backend can serve the full package.

All functions take "stripped" closed traces: the duplicated closing sample has
been removed and the arrays are treated cyclically (the step from the last
sample back to the first is included).
"""

import numpy as np

_TWO_PI = 2.0 * np.pi


def line_sum(theta, phi):
    """Cyclic midpoint-rule accumulation of (1 - cos(theta)) * dphi.

    ``theta`` and ``phi`` are matching 1-D arrays of polar angle and
    continuously unwrapped azimuth.  The wrap-around azimuth step is reduced
    into (-pi, pi], which is valid because construction guarantees consecutive
    samples never differ by pi or more in azimuth.
    """
    theta = np.asarray(theta, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    n = theta.shape[0]
    if n < 2:
        return 0.0
    mid = 0.5 * (theta[:-1] + theta[1:])
    acc = float(np.sum((1.0 - np.cos(mid)) * np.diff(phi)))
    d = phi[0] - phi[-1]
    d -= _TWO_PI * np.round(d / _TWO_PI)
    acc += (1.0 - np.cos(0.5 * (theta[-1] + theta[0]))) * d
    return float(acc)


def fan_excess(dirs, pivot):
    """Signed spherical area of the fan triangulation of a cyclic direction list.

    Each consecutive pair (v, w) forms a geodesic triangle with the fixed
    ``pivot`` apex; the signed excess of every triangle is accumulated with
    the two-times-atan2 form, which is stable for thin triangles.
    """
    v = np.asarray(dirs, dtype=np.float64)
    if v.shape[0] < 2:
        return 0.0
    p = np.asarray(pivot, dtype=np.float64)
    w = np.roll(v, -1, axis=0)
    det = np.cross(v, w) @ p
    den = 1.0 + v @ p + w @ p + np.einsum("ij,ij->i", v, w)
    return float(np.sum(2.0 * np.arctan2(det, den)))


def transport_frame(dirs, e1):
    """Parallel-transport the vector ``e1`` once around a cyclic direction list.

    Every step applies the minimal (geodesic, zero-twist) rotation carrying
    direction i onto direction i+1.  The per-step rotations are composed as a
    balanced product of 3x3 matrices, which keeps the Python fallback fast for
    long traces.  Returns the transported vector as a 3-tuple of floats.
    """
    v = np.asarray(dirs, dtype=np.float64)
    n = v.shape[0]
    start = np.asarray(e1, dtype=np.float64)
    if n < 2:
        return (float(start[0]), float(start[1]), float(start[2]))
    w = np.roll(v, -1, axis=0)
    c = np.cross(v, w)
    d = np.einsum("ij,ij->i", v, w)
    if np.any(d <= -1.0 + 1e-12):
        raise ValueError("antiparallel transport step")
    # R = d*I + [c]_x + c c^T / (1 + d)  (rotation taking v onto w)
    mats = np.zeros((n, 3, 3))
    mats[:, 0, 0] = d
    mats[:, 1, 1] = d
    mats[:, 2, 2] = d
    mats[:, 0, 1] -= c[:, 2]
    mats[:, 0, 2] += c[:, 1]
    mats[:, 1, 0] += c[:, 2]
    mats[:, 1, 2] -= c[:, 0]
    mats[:, 2, 0] -= c[:, 1]
    mats[:, 2, 1] += c[:, 0]
    mats += c[:, :, None] * (c[:, None, :] / (1.0 + d)[:, None, None])
    while mats.shape[0] > 1:
        if mats.shape[0] % 2:
            head, tail = mats[:-1], mats[-1:]
        else:
            head, tail = mats, None
        paired = np.matmul(head[1::2], head[0::2])
        mats = paired if tail is None else np.concatenate([paired, tail])
    f = mats[0] @ start
    return (float(f[0]), float(f[1]), float(f[2]))
