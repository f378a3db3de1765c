"""Signed solid angle enclosed by a closed tangent trace, three ways.

Two independent quadratures compute the same quantity:

* :func:`solid_angle_line_integral` — accumulate (1 - cos theta) d(phi) over
  the trace (azimuth-based; singular at the coordinate poles);
* :func:`solid_angle_spherical_excess` — signed area of a geodesic fan
  triangulation (direction-based; no pole singularity).

A third, brute-force oracle (:func:`parallel_transport_holonomy`) transports
an orthonormal dyad around the trace with zero twist; the net rotation of the
transported frame equals the solid angle modulo 2 pi.  Disagreement between
the methods beyond their combined error budget is a hard error
(:class:`~vacphase.errors.MethodDisagreementError`), never a warning, because
this number feeds every downstream phase prediction.

Sign and sheet conventions
--------------------------
Omega is *accumulated*, not reduced mod 4 pi: an m-turn helix yields
m * 2 pi * (1 - cos theta).  Omega is positive when the trace circulates
counterclockwise seen from +z (azimuth increasing at theta < pi/2); a
right-handed helix wound upward gives Omega > 0.  Multi-loop bookkeeping is
anchored to the -z axis (the accumulated value changes by multiples of 4 pi
if the trace is rotated across that anchor; modulo 4 pi it is rotation
invariant).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ClosureError, DomainError, MethodDisagreementError, PoleProximityError, ValidationError
from .geometry import TangentTrace

_TWO_PI = 2.0 * math.pi
_FOUR_PI = 4.0 * math.pi

METHOD_LINE_INTEGRAL = "line_integral"
METHOD_SPHERICAL_EXCESS = "spherical_excess"
METHOD_CLOSED_FORM = "closed_form_helix"
METHOD_PARALLEL_TRANSPORT = "parallel_transport"

#: Default bound on |transport holonomy - Omega| taken mod 2 pi.
DEFAULT_HOLONOMY_TOL = 1e-6

#: Pivot antipode clearance (rad) below which the fan triangulation switches
#: away from the preferred +z apex.
_PIVOT_SAFETY = 0.05


@dataclass(frozen=True)
class SolidAngle:
    """Signed, accumulated solid angle in steradians with an error estimate."""

    omega: float
    method: str
    estimated_error: float


def wrap_angle(x):
    """Reduce an angle to (-pi, pi]."""
    w = math.remainder(x, math.tau)
    if w <= -math.pi:
        w += math.tau
    return w


def _error_floor(omega):
    # Covers rounding noise when the discretization error itself is at the
    # floating-point floor (e.g. helix traces, where the midpoint rule is
    # exact up to finite-difference noise in the tangents).
    return 5e-12 * (1.0 + abs(omega))


def _require_closed(trace):
    if not isinstance(trace, TangentTrace):
        raise ValidationError("expected a TangentTrace")
    if not trace.closed:
        raise ClosureError("open trace: solid-angle methods require a closed tangent trace")


def solid_angle_closed_form(theta, loops):
    """Exact solid angle of a constant-polar-angle loop: loops * 2 pi * (1 - cos theta)."""
    if isinstance(theta, bool) or not isinstance(theta, (int, float)) or not math.isfinite(theta):
        raise DomainError("theta must be a finite number")
    if not 0.0 <= theta <= math.pi:
        raise DomainError("theta must lie in [0, pi], got %r" % (theta,))
    if isinstance(loops, bool) or not isinstance(loops, int) or loops < 1:
        raise DomainError("loops must be a positive integer")
    omega = loops * _TWO_PI * (1.0 - math.cos(theta))
    return SolidAngle(omega=omega, method=METHOD_CLOSED_FORM, estimated_error=0.0)


def solid_angle_line_integral(trace):
    """Solid angle via the cyclic midpoint rule on (1 - cos theta) d(phi).

    The estimated error comes from re-evaluating on every second sample
    (Richardson comparison), plus a floating-point floor.
    """
    _require_closed(trace)
    if trace.has_polar_samples:
        raise PoleProximityError(
            "trace contains samples on a coordinate pole; the azimuth-based line "
            "integral is undefined there (use the spherical-excess method)"
        )
    theta, phi = trace.unique_spherical()
    if theta.shape[0] < 2:
        return SolidAngle(0.0, METHOD_LINE_INTEGRAL, _error_floor(0.0))
    th = np.ascontiguousarray(theta)
    ph = np.ascontiguousarray(phi)
    omega_h = kernels.line_sum(th, ph)
    omega_2h = kernels.line_sum(np.ascontiguousarray(th[::2]), np.ascontiguousarray(ph[::2]))
    est = abs(omega_h - omega_2h) + _error_floor(omega_h)
    return SolidAngle(omega=omega_h, method=METHOD_LINE_INTEGRAL, estimated_error=est)


def _pivot_candidates(dirs):
    axes = [
        np.array([0.0, 0.0, 1.0]),
        np.array([0.0, 0.0, -1.0]),
        np.array([1.0, 0.0, 0.0]),
        np.array([-1.0, 0.0, 0.0]),
        np.array([0.0, 1.0, 0.0]),
        np.array([0.0, -1.0, 0.0]),
    ]
    centroid = dirs.mean(axis=0)
    nc = np.linalg.norm(centroid)
    if nc > 1e-9:
        axes.append(centroid / nc)
        axes.append(-centroid / nc)
    return axes


def _antipode_clearance(dirs, pivot):
    # Smallest angle between any trace direction and the pivot's antipode.
    worst = float(np.max(dirs @ (-pivot)))
    return math.acos(min(1.0, max(-1.0, worst)))


def _fan_extrapolated(dirs, pivot):
    f_h = kernels.fan_excess(dirs, np.ascontiguousarray(pivot))
    f_2h = kernels.fan_excess(np.ascontiguousarray(dirs[::2]), np.ascontiguousarray(pivot))
    omega = f_h + (f_h - f_2h) / 3.0
    est = abs(f_h - f_2h) / 3.0 + _error_floor(omega)
    return omega, est


def solid_angle_spherical_excess(trace):
    """Solid angle via signed geodesic-fan triangle areas, Richardson extrapolated.

    The fan apex is +z whenever the trace stays clear of its antipode, which
    matches the line integral's multi-loop bookkeeping exactly.  If the trace
    approaches -z, the apex moves to the best-cleared candidate direction and
    the result is shifted by the integer number of 4-pi sheets separating the
    two apex conventions (the continuum part of the two quadratures remains
    independent; only that integer uses the azimuth bookkeeping).
    """
    _require_closed(trace)
    dirs = trace.unique_directions()
    n = dirs.shape[0]
    if n < 2:
        return SolidAngle(0.0, METHOD_SPHERICAL_EXCESS, _error_floor(0.0))
    wrapped = np.roll(dirs, -1, axis=0)
    dots = np.einsum("ij,ij->i", dirs, wrapped)
    if np.any(dots <= 0.0):
        i = int(np.argmin(dots))
        raise DomainError(
            "consecutive trace directions %d and %d are separated by pi/2 or more; "
            "sample the curve more densely" % (i, (i + 1) % n)
        )
    dirs = np.ascontiguousarray(dirs)
    z_axis = np.array([0.0, 0.0, 1.0])
    if _antipode_clearance(dirs, z_axis) >= _PIVOT_SAFETY:
        omega, est = _fan_extrapolated(dirs, z_axis)
        return SolidAngle(omega=omega, method=METHOD_SPHERICAL_EXCESS, estimated_error=est)
    # Fallback apex: the trace runs too close to -z for the +z fan.
    candidates = _pivot_candidates(dirs)
    scores = [_antipode_clearance(dirs, p) for p in candidates]
    best = int(np.argmax(scores))
    if scores[best] < 1e-4:
        raise DomainError("no viable fan apex: trace approaches every candidate antipode")
    omega, est = _fan_extrapolated(dirs, candidates[best])
    if not trace.has_polar_samples:
        # Align the sheet with the -z-anchored convention of the line integral.
        reference = solid_angle_line_integral(trace).omega
        omega += _FOUR_PI * round((reference - omega) / _FOUR_PI)
    return SolidAngle(omega=omega, method=METHOD_SPHERICAL_EXCESS, estimated_error=est)


def parallel_transport_holonomy(trace):
    """Net frame rotation after zero-twist transport around the trace, in (-pi, pi].

    Equals the enclosed solid angle modulo 2 pi (within 1e-6 at ordinary
    sampling densities; the value is Richardson extrapolated internally).
    The accumulated multi-loop winding is *not* recoverable from this oracle.
    """
    _require_closed(trace)
    dirs = trace.unique_directions()
    n = dirs.shape[0]
    if n < 2:
        return 0.0
    v0 = dirs[0]
    ref = np.array([0.0, 0.0, 1.0]) if abs(v0[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    a = np.cross(ref, v0)
    e1 = a / np.linalg.norm(a)
    e2 = np.cross(v0, e1)
    dirs = np.ascontiguousarray(dirs)
    e1c = np.ascontiguousarray(e1)
    f = kernels.transport_frame(dirs, e1c)
    alpha_h = math.atan2(
        f[0] * e2[0] + f[1] * e2[1] + f[2] * e2[2],
        f[0] * e1[0] + f[1] * e1[1] + f[2] * e1[2],
    )
    sub = np.ascontiguousarray(dirs[::2])
    if sub.shape[0] >= 2:
        g = kernels.transport_frame(sub, e1c)
        alpha_2h = math.atan2(
            g[0] * e2[0] + g[1] * e2[1] + g[2] * e2[2],
            g[0] * e1[0] + g[1] * e1[1] + g[2] * e1[2],
        )
        alpha_2h = alpha_h + wrap_angle(alpha_2h - alpha_h)
        alpha = alpha_h + (alpha_h - alpha_2h) / 3.0
    else:
        alpha = alpha_h
    return wrap_angle(alpha)


def solid_angle_with_checks(trace, *, holonomy_tol=DEFAULT_HOLONOMY_TOL, agreement_factor=1.0):
    """Evaluate all three methods and enforce their mutual agreement.

    Returns ``(line, excess, transport)`` where the first two are
    :class:`SolidAngle` values and the third is the transport holonomy in
    (-pi, pi].  Raises :class:`MethodDisagreementError` when the two
    quadratures differ by more than ``agreement_factor`` times their combined
    error estimate, or when the transport oracle differs from the line
    integral by more than ``holonomy_tol`` mod 2 pi.
    """
    if not (isinstance(holonomy_tol, (int, float)) and holonomy_tol > 0):
        raise ValidationError("holonomy tolerance must be a positive number")
    if not (isinstance(agreement_factor, (int, float)) and agreement_factor > 0):
        raise ValidationError("agreement factor must be a positive number")
    line = solid_angle_line_integral(trace)
    excess = solid_angle_spherical_excess(trace)
    transport = parallel_transport_holonomy(trace)
    diff = abs(line.omega - excess.omega)
    budget = agreement_factor * (line.estimated_error + excess.estimated_error)
    if diff > budget:
        raise MethodDisagreementError(
            "solid-angle quadratures disagree: line integral %.17g sr vs spherical "
            "excess %.17g sr (|diff| %.3e > budget %.3e)" % (line.omega, excess.omega, diff, budget)
        )
    mismatch = abs(wrap_angle(transport - line.omega))
    if mismatch > holonomy_tol:
        raise MethodDisagreementError(
            "transport holonomy disagrees with the solid angle mod 2 pi: "
            "|%.17g - %.17g| = %.3e rad > %.3e" % (transport, line.omega, mismatch, holonomy_tol)
        )
    return line, excess, transport
