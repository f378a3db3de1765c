# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the numerical hot loops.

Semantics match vacphase._kernels_py exactly: cyclic traces with the
duplicated closing sample already stripped.  Kept free of the NumPy C API on
purpose (typed memoryviews only) so the extension builds anywhere a C
compiler exists.
"""

from libc.math cimport atan2, cos, round as c_round

cdef double TWO_PI = 6.283185307179586476925286766559


def line_sum(const double[::1] theta, const double[::1] phi):
    """Cyclic midpoint-rule accumulation of (1 - cos(theta)) * dphi."""
    cdef Py_ssize_t i, n = theta.shape[0]
    cdef double acc = 0.0
    cdef double d
    if n < 2:
        return 0.0
    for i in range(n - 1):
        acc += (1.0 - cos(0.5 * (theta[i] + theta[i + 1]))) * (phi[i + 1] - phi[i])
    d = phi[0] - phi[n - 1]
    d -= TWO_PI * c_round(d / TWO_PI)
    acc += (1.0 - cos(0.5 * (theta[n - 1] + theta[0]))) * d
    return acc


def fan_excess(const double[:, ::1] dirs, const double[::1] pivot):
    """Signed spherical area of the fan triangulation of a cyclic direction list."""
    cdef Py_ssize_t i, j, n = dirs.shape[0]
    cdef double px = pivot[0], py = pivot[1], pz = pivot[2]
    cdef double vx, vy, vz, wx, wy, wz, cx, cy, cz, det, den
    cdef double acc = 0.0
    if n < 2:
        return 0.0
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        vx = dirs[i, 0]; vy = dirs[i, 1]; vz = dirs[i, 2]
        wx = dirs[j, 0]; wy = dirs[j, 1]; wz = dirs[j, 2]
        cx = vy * wz - vz * wy
        cy = vz * wx - vx * wz
        cz = vx * wy - vy * wx
        det = px * cx + py * cy + pz * cz
        den = 1.0 + (px * vx + py * vy + pz * vz) \
                  + (px * wx + py * wy + pz * wz) \
                  + (vx * wx + vy * wy + vz * wz)
        acc += 2.0 * atan2(det, den)
    return acc


def transport_frame(const double[:, ::1] dirs, const double[::1] e1):
    """Parallel-transport ``e1`` once around a cyclic direction list.

    Sequential Rodrigues steps: R x = d*x + c (x) x + c (c . x) / (1 + d)
    with c = v x w and d = v . w for each consecutive pair.
    Returns the transported vector as a 3-tuple of floats.
    """
    cdef Py_ssize_t i, j, n = dirs.shape[0]
    cdef double fx = e1[0], fy = e1[1], fz = e1[2]
    cdef double vx, vy, vz, wx, wy, wz, cx, cy, cz, d, t
    cdef double nfx, nfy, nfz
    if n < 2:
        return (fx, fy, fz)
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        vx = dirs[i, 0]; vy = dirs[i, 1]; vz = dirs[i, 2]
        wx = dirs[j, 0]; wy = dirs[j, 1]; wz = dirs[j, 2]
        cx = vy * wz - vz * wy
        cy = vz * wx - vx * wz
        cz = vx * wy - vy * wx
        d = vx * wx + vy * wy + vz * wz
        if d <= -1.0 + 1e-12:
            raise ValueError("antiparallel transport step")
        t = (cx * fx + cy * fy + cz * fz) / (1.0 + d)
        nfx = d * fx + (cy * fz - cz * fy) + cx * t
        nfy = d * fy + (cz * fx - cx * fz) + cy * t
        nfz = d * fz + (cx * fy - cy * fx) + cz * t
        fx = nfx; fy = nfy; fz = nfz
    return (fx, fy, fz)
