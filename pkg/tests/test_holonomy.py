"""Solid-angle evaluation: line integral, spherical excess, parallel
transport, and the closed-form helix oracle."""

import math

import numpy as np
import pytest

from vacphase import (
    DomainError,
    MethodDisagreementError,
    PoleProximityError,
    TangentTrace,
    parallel_transport_holonomy,
    solid_angle_closed_form,
    solid_angle_line_integral,
    solid_angle_spherical_excess,
    solid_angle_with_checks,
    wrap_angle,
)

from conftest import (
    make_helix_trace,
    octant_trace,
    random_smooth_trace,
    rotation_matrix,
)

TWO_PI = 2.0 * math.pi


def small_circle_trace(colatitude, n=2000):
    t = np.linspace(0.0, TWO_PI, n, endpoint=False)
    s, c = math.sin(colatitude), math.cos(colatitude)
    dirs = np.stack([s * np.cos(t), s * np.sin(t), np.full(n, c)], axis=1)
    dirs = np.vstack([dirs, dirs[:1]])
    return TangentTrace.from_directions(dirs)


# ---------------------------------------------------------------------------
# closed form


def test_closed_form_known_values():
    assert solid_angle_closed_form(math.pi / 2, 1).omega == pytest.approx(TWO_PI)
    assert solid_angle_closed_form(math.pi / 3, 1).omega == pytest.approx(math.pi)
    assert solid_angle_closed_form(0.0, 1).omega == 0.0
    three = solid_angle_closed_form(0.4, 3)
    one = solid_angle_closed_form(0.4, 1)
    assert three.omega == pytest.approx(3.0 * one.omega, rel=1e-15)


@pytest.mark.parametrize("theta,loops", [(-0.1, 1), (3.3, 1), (0.5, 0), (0.5, -2), (0.5, 1.5)])
def test_closed_form_domain_errors(theta, loops):
    with pytest.raises(DomainError):
        solid_angle_closed_form(theta, loops)


# ---------------------------------------------------------------------------
# line integral


@pytest.mark.parametrize("theta", [0.1, 0.5, 0.9, 1.5])
@pytest.mark.parametrize("loops", [1, 2])
def test_line_integral_matches_closed_form(theta, loops):
    trace = make_helix_trace(theta, loops, samples_per_turn=3600)
    got = solid_angle_line_integral(trace)
    want = solid_angle_closed_form(theta, loops).omega
    assert abs(got.omega - want) < 1e-9
    assert abs(got.omega - want) <= got.estimated_error + 1e-12


def test_line_integral_accumulates_past_full_sphere():
    trace = make_helix_trace(1.5, 5, samples_per_turn=720)
    got = solid_angle_line_integral(trace)
    want = 5.0 * TWO_PI * (1.0 - math.cos(1.5))
    assert got.omega > 4.0 * math.pi  # not reduced mod anything
    assert abs(got.omega - want) < 1e-7


def test_line_integral_small_circle_exact_quadrature():
    trace = small_circle_trace(0.8)
    want = TWO_PI * (1.0 - math.cos(0.8))
    assert solid_angle_line_integral(trace).omega == pytest.approx(want, abs=1e-12)


def test_line_integral_reversal_negates():
    trace = make_helix_trace(0.7, 1)
    fwd = solid_angle_line_integral(trace).omega
    bwd = solid_angle_line_integral(trace.reversed()).omega
    assert bwd == pytest.approx(-fwd, rel=1e-12)


def test_line_integral_rotation_invariant_away_from_anchor():
    # rotating the loop breaks the uniform-azimuth superconvergence of the
    # helix quadrature, so compare at the honest h^2 error scale
    trace = make_helix_trace(0.9, 1, samples_per_turn=3600)
    base = solid_angle_line_integral(trace)
    rot = rotation_matrix([1.0, 0.3, 0.2], 0.05)
    rotated = TangentTrace.from_directions(trace.directions @ rot.T)
    moved = solid_angle_line_integral(rotated)
    assert moved.omega == pytest.approx(base.omega, abs=1e-8)
    assert abs(moved.omega - base.omega) <= (
        base.estimated_error + moved.estimated_error + 1e-12
    )


def test_line_integral_refuses_polar_samples():
    with pytest.raises(PoleProximityError):
        solid_angle_line_integral(octant_trace())


# ---------------------------------------------------------------------------
# spherical excess


def test_octant_excess_is_quarter_sphere():
    got = solid_angle_spherical_excess(octant_trace(512))
    assert got.omega == pytest.approx(math.pi / 2, abs=1e-9)


@pytest.mark.parametrize("theta", [0.1, 0.5, 0.9, 1.5])
def test_excess_matches_closed_form(theta):
    trace = make_helix_trace(theta, 1, samples_per_turn=3600)
    got = solid_angle_spherical_excess(trace)
    want = solid_angle_closed_form(theta, 1).omega
    assert abs(got.omega - want) < 1e-9
    assert abs(got.omega - want) <= got.estimated_error + 1e-12


def test_excess_sheet_alignment_near_south_pole():
    # circle enclosing almost the whole sphere: the fan apex must move off
    # +z and the result must land on the same 4*pi sheet as the line integral
    trace = small_circle_trace(math.pi - 0.03)
    line = solid_angle_line_integral(trace).omega
    excess = solid_angle_spherical_excess(trace).omega
    want = TWO_PI * (1.0 - math.cos(math.pi - 0.03))
    assert line == pytest.approx(want, abs=1e-9)
    assert excess == pytest.approx(want, abs=1e-6)


def test_excess_rejects_backward_steps():
    # second step turns by more than a quarter sphere (negative dot product)
    dirs = np.array(
        [
            [1.0, 0.0, 0.0],
            [-0.5, 0.1, 0.86],
            [0.0, 1.0, 0.2],
            [1.0, 0.0, 0.0],
        ]
    )
    trace = TangentTrace.from_directions(dirs, closed=True, closure_tol=math.inf)
    with pytest.raises(DomainError):
        solid_angle_spherical_excess(trace)


# ---------------------------------------------------------------------------
# parallel transport


@pytest.mark.parametrize("theta", [0.3, 0.7, 1.2])
def test_transport_equals_solid_angle_mod_2pi(theta):
    trace = make_helix_trace(theta, 1)
    alpha = parallel_transport_holonomy(trace)
    omega = solid_angle_closed_form(theta, 1).omega
    assert wrap_angle(alpha - omega) == pytest.approx(0.0, abs=1e-8)


def test_transport_on_octant():
    alpha = parallel_transport_holonomy(octant_trace(512))
    assert alpha == pytest.approx(math.pi / 2, abs=1e-9)


def test_transport_multiloop_reduces_mod_2pi():
    trace = make_helix_trace(0.9, 3, samples_per_turn=1200)
    alpha = parallel_transport_holonomy(trace)
    omega = 3.0 * TWO_PI * (1.0 - math.cos(0.9))
    assert -math.pi < alpha <= math.pi
    assert wrap_angle(alpha - omega) == pytest.approx(0.0, abs=1e-7)


def test_transport_random_traces(rng):
    for _ in range(3):
        trace = random_smooth_trace(rng, n=16384)
        alpha = parallel_transport_holonomy(trace)
        omega = solid_angle_line_integral(trace).omega
        assert abs(wrap_angle(alpha - omega)) < 1e-6


# ---------------------------------------------------------------------------
# wrap_angle and the cross-checked bundle


def test_wrap_angle_half_open_interval():
    assert wrap_angle(math.pi) == math.pi
    assert wrap_angle(-math.pi) == math.pi
    assert wrap_angle(3.0 * math.pi) == pytest.approx(math.pi, abs=0.0)
    assert wrap_angle(0.0) == 0.0
    assert wrap_angle(TWO_PI) == pytest.approx(0.0, abs=1e-15)


def test_with_checks_returns_consistent_triple():
    trace = make_helix_trace(0.5, 2)
    line, excess, transport = solid_angle_with_checks(trace)
    assert line.method == "line_integral"
    assert excess.method == "spherical_excess"
    assert abs(line.omega - excess.omega) < 1e-9
    assert abs(wrap_angle(transport - line.omega)) < 1e-9


def test_with_checks_raises_on_tight_holonomy_tolerance():
    trace = make_helix_trace(0.5, 2)
    with pytest.raises(MethodDisagreementError):
        solid_angle_with_checks(trace, holonomy_tol=1e-16)


def test_with_checks_raises_on_tight_agreement_factor():
    trace = make_helix_trace(0.5, 2)
    with pytest.raises(MethodDisagreementError):
        solid_angle_with_checks(trace, agreement_factor=1e-12)


def test_open_trace_refused_everywhere():
    dirs = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    trace = TangentTrace.from_directions(dirs, closed=False)
    from vacphase import ClosureError

    for fn in (
        solid_angle_line_integral,
        solid_angle_spherical_excess,
        parallel_transport_holonomy,
    ):
        with pytest.raises(ClosureError):
            fn(trace)
