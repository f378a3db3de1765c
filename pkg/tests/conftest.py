"""Shared builders for the test suite: helix traces, random smooth closed
traces on the direction sphere, rotations, and great-circle arcs."""

import math

import numpy as np
import pytest

from vacphase import HelixSpec, TangentTrace, helix_to_path, tangent_trace


def make_helix_spec(theta, loops, samples_per_turn=3600, radius=1.0):
    """Helix whose tangent sits at polar angle ``theta`` from the axis."""
    if not 0 < theta <= math.pi / 2:
        raise ValueError("theta outside helix range")
    pitch = 2.0 * math.pi * radius * math.cos(theta) / math.sin(theta)
    return HelixSpec(radius=radius, pitch=pitch, turns=loops,
                     samples_per_turn=samples_per_turn)


def make_helix_trace(theta, loops, samples_per_turn=3600):
    spec = make_helix_spec(theta, loops, samples_per_turn)
    return tangent_trace(helix_to_path(spec))


def random_smooth_trace(rng, n=16384, harmonics=3, pole_margin=0.15):
    """Closed, pole-avoiding loop of unit directions from a random low-order
    Fourier curve.  Rejection-samples until the curve keeps away from the
    origin, from both poles, and from self-kinks."""
    decay = 1.0 / np.arange(1, harmonics + 1) ** 2
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    while True:
        a = rng.normal(size=(3, harmonics)) * decay
        b = rng.normal(size=(3, harmonics)) * decay
        offset = rng.normal(size=3)
        offset *= 0.3 / np.linalg.norm(offset)
        pts = np.zeros((n, 3))
        for k in range(harmonics):
            pts += np.outer(np.cos((k + 1) * t), a[:, k])
            pts += np.outer(np.sin((k + 1) * t), b[:, k])
        pts += offset
        r = np.linalg.norm(pts, axis=1)
        if r.min() < 0.3:
            continue
        dirs = pts / r[:, None]
        if np.abs(dirs[:, 2]).max() > math.cos(pole_margin):
            continue
        step_dots = np.einsum("ij,ij->i", dirs, np.roll(dirs, -1, axis=0))
        if step_dots.min() < 0.2:
            continue
        closed = np.vstack([dirs, dirs[:1]])
        return TangentTrace.from_directions(closed)


def rotation_matrix(axis, angle):
    """Rodrigues rotation matrix about a (not necessarily unit) axis."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    kx, ky, kz = axis
    cross = np.array([[0.0, -kz, ky], [kz, 0.0, -kx], [-ky, kx, 0.0]])
    return (
        math.cos(angle) * np.eye(3)
        + math.sin(angle) * cross
        + (1.0 - math.cos(angle)) * np.outer(axis, axis)
    )


def slerp_arc(u, v, n):
    """``n`` points along the great-circle arc from unit vector u to v,
    excluding the final endpoint."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    ang = math.atan2(np.linalg.norm(np.cross(u, v)), float(np.dot(u, v)))
    s = np.linspace(0.0, 1.0, n, endpoint=False)
    out = (
        np.sin((1.0 - s) * ang)[:, None] * u + np.sin(s * ang)[:, None] * v
    ) / math.sin(ang)
    return out


def octant_trace(points_per_edge=256):
    """Geodesic triangle over the +x/+y/+z octant (solid angle pi/2)."""
    ex = np.array([1.0, 0.0, 0.0])
    ey = np.array([0.0, 1.0, 0.0])
    ez = np.array([0.0, 0.0, 1.0])
    dirs = np.vstack(
        [
            slerp_arc(ex, ey, points_per_edge),
            slerp_arc(ey, ez, points_per_edge),
            slerp_arc(ez, ex, points_per_edge),
            ex[None, :],
        ]
    )
    return TangentTrace.from_directions(dirs)


@pytest.fixture
def rng():
    return np.random.default_rng(20260825)
