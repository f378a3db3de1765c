"""Fibre centreline geometry and its unit-tangent trace on the sphere.

A fibre is represented as a uniformly indexed polyline (:class:`FiberPath`);
analytic shapes enter only through generators such as :func:`helix_to_path`.
The direction of propagation along the fibre sweeps a curve on the unit
sphere — the tangent trace — which is what every downstream solid-angle and
phase computation consumes.

Conventions
-----------
* SI units throughout: positions in metres, angles in radians.
* A *closed* tangent trace repeats its first sample at the end; the angle
  between the first and last direction is the ``closure_gap``.
* Spherical coordinates use polar angle ``theta`` measured from +z and
  azimuth ``phi`` unwrapped continuously (consecutive samples always differ
  by less than pi in azimuth).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ClosureError, PoleProximityError, ValidationError

#: Samples whose polar angle is within this distance of 0 or pi are treated
#: as lying on a coordinate pole, where the azimuth is undefined.
POLE_GUARD = 1e-9

#: A trace declared closed must have closure_gap at or below this, unless the
#: caller overrides the tolerance.
DEFAULT_CLOSURE_TOL = 1e-6

_TWO_PI = 2.0 * math.pi


def _as_point_array(points):
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValidationError("points must be an (n, 3) array of 3D positions")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("points must be finite")
    return arr


def angle_between(u, v):
    """Angle in [0, pi] between two 3-vectors (stable near 0 and pi)."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    return float(math.atan2(np.linalg.norm(np.cross(u, v)), float(np.dot(u, v))))


@dataclass(eq=False)
class FiberPath:
    """Discretized 3D fibre centreline.

    ``closed_tangent`` declares that the *tangent trace* of this path is
    expected to close on itself (first and last tangent direction agree);
    it says nothing about the endpoints of the path in space.
    """

    points: np.ndarray
    closed_tangent: bool = True

    def __post_init__(self):
        self.points = _as_point_array(self.points)
        if not isinstance(self.closed_tangent, bool):
            raise ValidationError("closed_tangent must be a boolean")
        n = self.points.shape[0]
        if n < 4:
            raise ValidationError("a fibre path needs at least 4 points, got %d" % n)
        seg = np.diff(self.points, axis=0)
        seg_len = np.linalg.norm(seg, axis=1)
        if np.any(seg_len == 0.0):
            i = int(np.argmin(seg_len))
            raise ValidationError("consecutive path points %d and %d coincide" % (i, i + 1))
        unit = seg / seg_len[:, None]
        dots = np.einsum("ij,ij->i", unit[:-1], unit[1:])
        if np.any(dots <= -1.0 + 1e-12):
            i = int(np.argmin(dots))
            raise ValidationError(
                "segments %d and %d are antiparallel (tangent flips by pi in one step)" % (i, i + 1)
            )

    @property
    def n_points(self):
        return self.points.shape[0]


@dataclass(frozen=True)
class HelixSpec:
    """Analytic helix: x(t) = (R cos t, R sin t, pitch * t / 2pi).

    The tangent keeps a constant polar angle
    ``theta = arccos(pitch / sqrt(pitch^2 + (2 pi R)^2))`` which lies in
    (0, pi/2]; ``pitch = 0`` degenerates to a planar circle (theta = pi/2).
    """

    radius: float
    pitch: float
    turns: int
    samples_per_turn: int = 3600

    def __post_init__(self):
        if isinstance(self.radius, bool) or not isinstance(self.radius, (int, float)):
            raise ValidationError("radius must be a number")
        if isinstance(self.pitch, bool) or not isinstance(self.pitch, (int, float)):
            raise ValidationError("pitch must be a number")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValidationError("radius must be positive and finite")
        if not (math.isfinite(self.pitch) and self.pitch >= 0):
            raise ValidationError("pitch must be non-negative and finite")
        if isinstance(self.turns, bool) or not isinstance(self.turns, int) or self.turns < 1:
            raise ValidationError("turns must be a positive integer")
        if (
            isinstance(self.samples_per_turn, bool)
            or not isinstance(self.samples_per_turn, int)
            or self.samples_per_turn < 16
        ):
            raise ValidationError("samples_per_turn must be an integer >= 16")

    @property
    def theta(self):
        """Constant polar angle of the helix tangent."""
        return math.acos(self.pitch / math.hypot(self.pitch, _TWO_PI * self.radius))


@dataclass(eq=False)
class TangentTrace:
    """Unit tangent directions of a path, as a trace on the unit sphere.

    ``theta``/``phi`` are per-sample spherical coordinates with ``phi``
    unwrapped continuously.  Samples sitting on a coordinate pole (within
    :data:`POLE_GUARD` of theta = 0 or pi) have no well-defined azimuth; for
    traces built through :meth:`from_directions` such samples carry the
    previous sample's azimuth and set ``has_polar_samples``, which excludes
    the trace from the azimuth-based solid-angle quadrature (the
    direction-based methods still apply).
    """

    directions: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    closure_gap: float
    closed: bool
    has_polar_samples: bool = False

    def __post_init__(self):
        self.directions = np.ascontiguousarray(self.directions, dtype=np.float64)
        norms = np.linalg.norm(self.directions, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-12):
            raise ValidationError("trace directions must be unit vectors (within 1e-12)")

    @property
    def n_samples(self):
        return self.directions.shape[0]

    def unique_directions(self):
        """Directions with the duplicated closing sample stripped."""
        if self.directions.shape[0] >= 2:
            return self.directions[:-1]
        return self.directions

    def unique_spherical(self):
        """(theta, phi) with the duplicated closing sample stripped."""
        if self.theta.shape[0] >= 2:
            return self.theta[:-1], self.phi[:-1]
        return self.theta, self.phi

    def reversed(self):
        """The same trace traversed in the opposite direction."""
        return TangentTrace.from_directions(
            self.directions[::-1],
            closed=self.closed,
            closure_tol=math.inf,
        )

    @classmethod
    def from_directions(cls, directions, closed=True, closure_tol=DEFAULT_CLOSURE_TOL):
        """Build a trace directly from direction samples (normalized here).

        Unlike :func:`tangent_trace`, polar samples are tolerated: the octant
        loop through (0, 0, 1) is a legitimate input for the direction-based
        solid-angle methods.  A closed trace must repeat its first sample at
        the end (within ``closure_tol``).
        """
        arr = np.asarray(directions, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 3 or arr.shape[0] < 1:
            raise ValidationError("directions must be an (n, 3) array with n >= 1")
        if not np.all(np.isfinite(arr)):
            raise ValidationError("directions must be finite")
        norms = np.linalg.norm(arr, axis=1)
        if np.any(norms == 0.0):
            raise ValidationError("directions must be nonzero")
        dirs = arr / norms[:, None]
        theta = np.arccos(np.clip(dirs[:, 2], -1.0, 1.0))
        polar = (theta < POLE_GUARD) | (theta > math.pi - POLE_GUARD)
        phi_raw = np.arctan2(dirs[:, 1], dirs[:, 0])
        if polar.any():
            # Carry the previous azimuth across polar samples so phi stays
            # continuous; a leading polar run gets azimuth 0.
            phi_raw = phi_raw.copy()
            filled = np.where(polar, np.nan, phi_raw)
            idx = np.where(~polar, np.arange(arr.shape[0]), -1)
            idx = np.maximum.accumulate(idx)
            phi_raw = np.where(idx >= 0, filled[np.maximum(idx, 0)], 0.0)
        phi = np.unwrap(phi_raw)
        steps = np.abs(np.diff(phi))
        if steps.size:
            adjacent_polar = polar[:-1] | polar[1:]
            if np.any((steps >= math.pi) & ~adjacent_polar):
                raise ValidationError(
                    "azimuth jumps by pi or more between consecutive samples; "
                    "the trace passes a pole between samples"
                )
        gap = angle_between(dirs[0], dirs[-1]) if arr.shape[0] >= 2 else 0.0
        if closed and gap > closure_tol:
            raise ClosureError(
                "trace declared closed but closure gap %.3e rad exceeds tolerance %.3e"
                % (gap, closure_tol)
            )
        return cls(
            directions=dirs,
            theta=theta,
            phi=phi,
            closure_gap=gap,
            closed=bool(closed),
            has_polar_samples=bool(polar.any()),
        )


def helix_to_path(spec):
    """Sample a helix into a :class:`FiberPath` (turns * samples_per_turn + 1 points)."""
    if not isinstance(spec, HelixSpec):
        raise ValidationError("helix_to_path expects a HelixSpec")
    n = spec.turns * spec.samples_per_turn
    t = np.linspace(0.0, _TWO_PI * spec.turns, n + 1)
    points = np.column_stack(
        [
            spec.radius * np.cos(t),
            spec.radius * np.sin(t),
            spec.pitch * (t / _TWO_PI),
        ]
    )
    return FiberPath(points=points, closed_tangent=True)


def _fd_derivatives(pts):
    """Finite-difference point derivatives along a uniformly indexed polyline.

    Fourth-order stencils (five-point central in the interior, one-sided at
    the ends) keep the tangent error of smooth curves far below the closure
    and solid-angle tolerances at ordinary sampling densities.  With exactly
    four points only second-order stencils fit.  A common constant factor is
    dropped since the result is normalized.
    """
    n = pts.shape[0]
    d = np.empty_like(pts)
    if n >= 5:
        d[2:-2] = pts[:-4] - 8.0 * pts[1:-3] + 8.0 * pts[3:-1] - pts[4:]
        d[0] = -25.0 * pts[0] + 48.0 * pts[1] - 36.0 * pts[2] + 16.0 * pts[3] - 3.0 * pts[4]
        d[1] = -3.0 * pts[0] - 10.0 * pts[1] + 18.0 * pts[2] - 6.0 * pts[3] + pts[4]
        d[-2] = 3.0 * pts[-1] + 10.0 * pts[-2] - 18.0 * pts[-3] + 6.0 * pts[-4] - pts[-5]
        d[-1] = 25.0 * pts[-1] - 48.0 * pts[-2] + 36.0 * pts[-3] - 16.0 * pts[-4] + 3.0 * pts[-5]
    else:
        d[1:-1] = pts[2:] - pts[:-2]
        d[0] = -3.0 * pts[0] + 4.0 * pts[1] - pts[2]
        d[-1] = 3.0 * pts[-1] - 4.0 * pts[-2] + pts[-3]
    return d


def tangent_trace(path, closure_tol=DEFAULT_CLOSURE_TOL):
    """Unit-tangent trace of a fibre path.

    Tangents come from finite differences on the polyline (one code path for
    every curve; analytic derivatives are used only as test oracles).  The
    trace is rejected if any sample falls within :data:`POLE_GUARD` of a
    coordinate pole — reorient the path so the tangents avoid the poles — or
    if a closed-declared path fails to close within ``closure_tol``.
    """
    if not isinstance(path, FiberPath):
        raise ValidationError("tangent_trace expects a FiberPath")
    if not (isinstance(closure_tol, (int, float)) and closure_tol > 0):
        raise ValidationError("closure tolerance must be a positive number")
    d = _fd_derivatives(path.points)
    norms = np.linalg.norm(d, axis=1)
    if np.any(norms <= 1e-12 * norms.max()):
        i = int(np.argmin(norms))
        raise ValidationError("degenerate tangent (zero-length derivative) at sample %d" % i)
    dirs = d / norms[:, None]
    theta = np.arccos(np.clip(dirs[:, 2], -1.0, 1.0))
    near_pole = (theta < POLE_GUARD) | (theta > math.pi - POLE_GUARD)
    if near_pole.any():
        i = int(np.argmax(near_pole))
        raise PoleProximityError(
            "tangent sample %d lies within %g rad of a coordinate pole; "
            "reorient the path so the tangent trace avoids the poles" % (i, POLE_GUARD)
        )
    phi = np.unwrap(np.arctan2(dirs[:, 1], dirs[:, 0]))
    if np.any(np.abs(np.diff(phi)) >= math.pi):
        raise ValidationError(
            "azimuth jumps by pi or more between consecutive samples; sample more densely"
        )
    gap = angle_between(dirs[0], dirs[-1])
    if path.closed_tangent and gap > closure_tol:
        raise ClosureError(
            "tangent trace does not close: gap %.3e rad exceeds tolerance %.3e "
            "(sample more densely or loosen the closure tolerance)" % (gap, closure_tol)
        )
    return TangentTrace(
        directions=dirs,
        theta=theta,
        phi=phi,
        closure_gap=gap,
        closed=path.closed_tangent,
        has_polar_samples=False,
    )
