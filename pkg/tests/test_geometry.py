"""Fibre paths, helix sampling, and tangent-trace extraction."""

import math

import numpy as np
import pytest

from vacphase import (
    ClosureError,
    FiberPath,
    HelixSpec,
    PoleProximityError,
    TangentTrace,
    ValidationError,
    angle_between,
    helix_to_path,
    tangent_trace,
)

from conftest import make_helix_spec, rotation_matrix


# ---------------------------------------------------------------------------
# HelixSpec


def test_helix_spec_theta_pitchless():
    spec = HelixSpec(radius=2.0, pitch=0.0, turns=1)
    assert spec.theta == pytest.approx(math.pi / 2, abs=0.0)


def test_helix_spec_theta_matches_arctan():
    spec = HelixSpec(radius=0.07, pitch=0.31, turns=3)
    expected = math.atan2(2.0 * math.pi * 0.07, 0.31)
    assert spec.theta == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(radius=0.0, pitch=1.0, turns=1),
        dict(radius=-1.0, pitch=1.0, turns=1),
        dict(radius=1.0, pitch=-0.5, turns=1),
        dict(radius=1.0, pitch=math.nan, turns=1),
        dict(radius=1.0, pitch=1.0, turns=0),
        dict(radius=1.0, pitch=1.0, turns=2.5),
        dict(radius=1.0, pitch=1.0, turns=1, samples_per_turn=8),
        dict(radius=1.0, pitch=1.0, turns=1, samples_per_turn=100.5),
    ],
)
def test_helix_spec_rejects_bad_parameters(kwargs):
    with pytest.raises(ValidationError):
        HelixSpec(**kwargs)


def test_helix_to_path_shape_and_endpoints():
    spec = HelixSpec(radius=0.5, pitch=0.2, turns=3, samples_per_turn=100)
    path = helix_to_path(spec)
    pts = path.points
    assert pts.shape == (301, 3)
    np.testing.assert_allclose(pts[0], [0.5, 0.0, 0.0], atol=0.0)
    np.testing.assert_allclose(pts[-1], [0.5, 0.0, 0.6], atol=1e-12)
    radii = np.hypot(pts[:, 0], pts[:, 1])
    np.testing.assert_allclose(radii, 0.5, rtol=1e-12)


# ---------------------------------------------------------------------------
# FiberPath validation


def test_fiber_path_requires_enough_points():
    with pytest.raises(ValidationError):
        FiberPath(points=np.zeros((3, 3)) + np.arange(3)[:, None])


def test_fiber_path_rejects_nonfinite():
    pts = np.zeros((5, 3))
    pts[:, 0] = np.arange(5.0)
    pts[2, 1] = np.inf
    with pytest.raises(ValidationError):
        FiberPath(points=pts)


def test_fiber_path_rejects_repeated_point():
    pts = np.zeros((5, 3))
    pts[:, 0] = [0.0, 1.0, 1.0, 2.0, 3.0]
    with pytest.raises(ValidationError):
        FiberPath(points=pts)


def test_fiber_path_rejects_reversal():
    pts = np.zeros((5, 3))
    pts[:, 0] = [0.0, 1.0, 2.0, 1.0, 0.5]  # doubles back on itself
    with pytest.raises(ValidationError):
        FiberPath(points=pts)


# ---------------------------------------------------------------------------
# Tangent extraction accuracy


def exact_helix_tangents(spec, n):
    t = np.linspace(0.0, 2.0 * math.pi * spec.turns, n)
    dx = -spec.radius * np.sin(t)
    dy = spec.radius * np.cos(t)
    dz = np.full_like(t, spec.pitch / (2.0 * math.pi))
    v = np.stack([dx, dy, dz], axis=1)
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def test_tangent_accuracy_on_helix():
    spec = make_helix_spec(0.7, loops=1, samples_per_turn=360)
    path = helix_to_path(spec)
    trace = tangent_trace(path)
    exact = exact_helix_tangents(spec, path.n_points)
    worst = max(
        angle_between(d, e) for d, e in zip(trace.directions, exact)
    )
    assert worst < 1e-7


def test_tangent_converges_at_fourth_order():
    errors = []
    for spt in (90, 360):
        spec = make_helix_spec(0.9, loops=1, samples_per_turn=spt)
        path = helix_to_path(spec)
        trace = tangent_trace(path)
        exact = exact_helix_tangents(spec, path.n_points)
        errors.append(
            max(angle_between(d, e) for d, e in zip(trace.directions, exact))
        )
    # quadrupling the density should shrink the error by about 4^4 = 256
    assert errors[0] / errors[1] > 100


def test_trace_closure_gap_small():
    spec = make_helix_spec(0.5, loops=2, samples_per_turn=360)
    trace = tangent_trace(helix_to_path(spec))
    assert trace.closed
    assert trace.closure_gap < 1e-8


def test_open_path_raises_closure_error():
    # half a turn cannot close its tangent loop
    t = np.linspace(0.0, math.pi, 50)
    pts = np.stack([np.cos(t), np.sin(t), 0.05 * t], axis=1)
    with pytest.raises(ClosureError):
        tangent_trace(FiberPath(points=pts))


def test_open_path_accepted_when_declared_open():
    t = np.linspace(0.0, math.pi, 50)
    pts = np.stack([np.cos(t), np.sin(t), 0.05 * t], axis=1)
    trace = tangent_trace(FiberPath(points=pts, closed_tangent=False))
    assert not trace.closed


def test_straight_path_through_pole_rejected():
    pts = np.zeros((12, 3))
    pts[:, 2] = np.arange(12.0)  # tangents exactly at the +z pole
    with pytest.raises(PoleProximityError):
        tangent_trace(FiberPath(points=pts, closed_tangent=False))


# ---------------------------------------------------------------------------
# TangentTrace construction from raw directions


def test_from_directions_normalizes_and_closes():
    raw = np.array(
        [
            [2.0, 0.0, 0.0],
            [0.0, 2.0, 0.0],
            [-2.0, 0.0, 0.0],
            [0.0, -2.0, 0.0],
            [2.0, 0.0, 0.0],
        ]
    )
    trace = TangentTrace.from_directions(raw)
    np.testing.assert_allclose(np.linalg.norm(trace.directions, axis=1), 1.0, rtol=1e-15)
    assert trace.closed
    assert trace.closure_gap == 0.0
    assert trace.unique_directions().shape == (4, 3)


def test_from_directions_rejects_open_loop_when_closed():
    raw = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    with pytest.raises(ClosureError):
        TangentTrace.from_directions(raw)


def test_from_directions_flags_polar_samples():
    raw = np.array(
        [
            [1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0],
            [-1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0],
            [1.0, 0.0, 0.0],
        ]
    )
    trace = TangentTrace.from_directions(raw)
    assert trace.has_polar_samples


def test_reversed_trace_flips_orientation():
    raw = np.array(
        [
            [1.0, 0.0, 0.1],
            [0.0, 1.0, 0.1],
            [-1.0, 0.0, 0.1],
            [0.0, -1.0, 0.1],
            [1.0, 0.0, 0.1],
        ]
    )
    trace = TangentTrace.from_directions(raw)
    back = trace.reversed()
    np.testing.assert_allclose(back.directions, trace.directions[::-1], atol=0.0)


def test_spherical_coordinates_unwrap_full_turn():
    spec = make_helix_spec(0.4, loops=2, samples_per_turn=500)
    trace = tangent_trace(helix_to_path(spec))
    # azimuth should advance continuously by 2*pi per loop, not wrap
    assert trace.phi[-1] - trace.phi[0] == pytest.approx(4.0 * math.pi, rel=1e-9)
    np.testing.assert_allclose(trace.theta, 0.4, atol=1e-6)


def test_rotation_preserves_step_angles(rng):
    spec = make_helix_spec(1.1, loops=1, samples_per_turn=200)
    trace = tangent_trace(helix_to_path(spec))
    rot = rotation_matrix(rng.normal(size=3), 0.7)
    rotated = TangentTrace.from_directions(trace.directions @ rot.T)
    steps = [
        angle_between(u, v)
        for u, v in zip(trace.directions[:-1], trace.directions[1:])
    ]
    steps_rot = [
        angle_between(u, v)
        for u, v in zip(rotated.directions[:-1], rotated.directions[1:])
    ]
    np.testing.assert_allclose(steps, steps_rot, atol=1e-12)
