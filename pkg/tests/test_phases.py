"""Per-polarization geometric phases and their exact floating-point
identities."""

import math

import pytest

from vacphase import (
    PhaseResult,
    PhotonOccupation,
    SolidAngle,
    ValidationError,
    geometric_phases,
    solid_angle_closed_form,
    total_observed_phase,
    vacuum_phases,
)


def test_occupation_validation():
    PhotonOccupation(0, 0)
    PhotonOccupation(7, 3)
    for bad in [(-1, 0), (0, -2), (0.5, 0), (0, 1.5), (True, 0), (0, False), ("1", 0)]:
        with pytest.raises(ValidationError):
            PhotonOccupation(*bad)


def test_vacuum_example_quarter_circle():
    # theta = pi/3 single-loop helix encloses a solid angle of exactly pi
    phi_l, phi_r = vacuum_phases(math.pi)
    assert phi_l == -math.pi / 2
    assert phi_r == math.pi / 2


def test_vacuum_example_full_cone():
    phi_l, phi_r = vacuum_phases(2.0 * math.pi)
    assert phi_l == -math.pi
    assert phi_r == math.pi


def test_vacuum_example_two_turns():
    omega = 4.0 * math.pi * (1.0 - math.cos(math.pi / 4))
    phi_l, phi_r = vacuum_phases(omega)
    assert phi_l == -(0.5 * omega)
    assert phi_r == 0.5 * omega
    assert phi_l + phi_r == 0.0


def test_single_photon_example():
    res = geometric_phases(PhotonOccupation(1, 0), math.pi)
    assert res.phi_left == -(1.5 * math.pi)
    assert res.phi_right == 0.5 * math.pi
    assert res.phi_total == -math.pi  # exact: 0.5*pi and 1.5*pi round compatibly


def test_zero_solid_angle_zeroes_everything():
    res = geometric_phases(PhotonOccupation(5, 2), 0.0)
    assert res.phi_left == 0.0
    assert res.phi_right == 0.0
    assert res.phi_vac_left == 0.0
    assert res.phi_vac_right == 0.0
    assert res.phi_total == 0.0


def test_accepts_solid_angle_wrapper():
    sa = solid_angle_closed_form(0.7, 2)
    res = geometric_phases(PhotonOccupation(0, 1), sa)
    assert res.omega == sa.omega
    assert res.phi_right == 1.5 * sa.omega


def test_exact_identities_random_triples(rng):
    for _ in range(200):
        n_l = int(rng.integers(0, 50))
        n_r = int(rng.integers(0, 50))
        omega = float(rng.uniform(-8.0 * math.pi, 8.0 * math.pi))
        res = geometric_phases(PhotonOccupation(n_l, n_r), omega)
        # each phase is the singly rounded product of the exact half-integer
        # occupation factor with omega
        assert res.phi_left == -((n_l + 0.5) * omega)
        assert res.phi_right == (n_r + 0.5) * omega
        assert res.phi_vac_left == -(0.5 * omega)
        assert res.phi_vac_right == 0.5 * omega
        assert res.phi_vac_left + res.phi_vac_right == 0.0
        assert res.phi_total == res.phi_left + res.phi_right


def test_total_observed_matches_sum_bitwise(rng):
    for _ in range(100):
        occ = PhotonOccupation(int(rng.integers(0, 9)), int(rng.integers(0, 9)))
        omega = float(rng.normal()) * 4.0
        res = geometric_phases(occ, omega)
        assert total_observed_phase(occ, omega) == res.phi_total


def test_total_tracks_occupation_difference_to_one_ulp(rng):
    # phi_left + phi_right equals (n_right - n_left) * omega up to a single
    # rounding of each product term
    for _ in range(300):
        n_l = int(rng.integers(0, 20))
        n_r = int(rng.integers(0, 20))
        omega = float(rng.uniform(-15.0, 15.0))
        total = total_observed_phase(PhotonOccupation(n_l, n_r), omega)
        algebraic = (n_r - n_l) * omega
        scale = max(abs(total), abs(algebraic), (n_l + n_r + 1) * abs(omega))
        assert abs(total - algebraic) <= 2.0 * 2.0**-53 * scale


def test_symmetric_occupation_cancels():
    for n in range(4):
        assert total_observed_phase(PhotonOccupation(n, n), 2.31) == 0.0


def test_occupation_difference_examples():
    assert total_observed_phase(PhotonOccupation(0, 1), math.pi) == math.pi
    omega = 2.0 * math.pi * (1.0 - math.cos(0.2))
    got = total_observed_phase(PhotonOccupation(3, 1), omega)
    assert got == pytest.approx(-2.0 * omega, rel=4e-16)


def test_linearity_in_occupation(rng):
    for _ in range(50):
        omega = float(rng.uniform(-10.0, 10.0))
        n = int(rng.integers(0, 30))
        lo = geometric_phases(PhotonOccupation(n, n), omega)
        hi = geometric_phases(PhotonOccupation(n + 1, n + 1), omega)
        # one rounding per product: the increment matches -omega to ~1 ulp
        # of the larger phase magnitude
        tol = (2 * n + 4) * 2.0**-53 * max(abs(omega), 1e-300)
        assert abs((hi.phi_left - lo.phi_left) + omega) <= tol
        assert abs((hi.phi_right - lo.phi_right) - omega) <= tol


def test_helix_sweep_linear_in_one_minus_cos():
    loops = 3
    occ = PhotonOccupation(0, 2)
    thetas = [0.3, 0.6, 1.0, 1.4]
    xs = [1.0 - math.cos(t) for t in thetas]
    ys = [
        geometric_phases(occ, solid_angle_closed_form(t, loops)).phi_right
        for t in thetas
    ]
    slope = (ys[-1] - ys[0]) / (xs[-1] - xs[0])
    assert slope == pytest.approx(2.5 * 2.0 * math.pi * loops, rel=1e-12)
    # interior points sit on the same line
    for x, y in zip(xs[1:-1], ys[1:-1]):
        assert y == pytest.approx(ys[0] + slope * (x - xs[0]), rel=1e-12)


def test_phase_result_is_frozen():
    res = geometric_phases(PhotonOccupation(0, 0), 1.0)
    assert isinstance(res, PhaseResult)
    with pytest.raises(AttributeError):
        res.phi_left = 0.0
