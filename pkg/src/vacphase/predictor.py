"""Compose geometry, holonomy, phases, media and the chamber filter into one prediction.

:func:`predict` evaluates a full experiment: the fibre's tangent trace, the
enclosed solid angle (line-integral primary, spherical-excess and transport
oracle as enforced cross-checks), the per-mode geometric phases, the chamber
suppression verdict, and the resulting net observable vacuum phase.
:func:`sweep_theta` repeats the prediction over a grid of helix tangent
angles, re-deriving the pitch per angle at fixed coil radius (how a fibre
wound on a cylinder is re-pitched in practice).
"""

import math
from dataclasses import dataclass, replace

from .chamber import (
    DEFAULT_BAND_GRID,
    ChamberGeometry,
    FrequencyBand,
    branch_wave_numbers,
    suppression_report,
)
from .errors import DomainError, SignalBandError, ValidationError
from .geometry import DEFAULT_CLOSURE_TOL, FiberPath, HelixSpec, helix_to_path, tangent_trace
from .holonomy import DEFAULT_HOLONOMY_TOL, solid_angle_with_checks
from .media import DispersiveMedium, GyrotropicMedium
from .phases import PhotonOccupation, geometric_phases

_TWO_PI = 2.0 * math.pi

REGIME_BOTH_PRESENT = "both_present"
REGIME_LEFT_ONLY = "left_only"
REGIME_RIGHT_ONLY = "right_only"
REGIME_NONE_PRESENT = "none_present"

#: Cutoff coefficients at which every chambered prediction re-evaluates the
#: suppression verdict, as a sensitivity check on the order-of-magnitude cutoff.
SENSITIVITY_COEFFICIENTS = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class CutoffSensitivity:
    """Suppression outcome re-evaluated at one alternative cutoff coefficient."""

    cutoff_coefficient: float
    regime: str
    net_vacuum_phase: float


@dataclass(eq=False)
class ExperimentSpec:
    """Everything needed for one prediction.

    ``geometry`` is either a :class:`HelixSpec` or a :class:`FiberPath`.
    ``chamber`` may be None (free space: both zero-point branches present);
    when a chamber is given, a frequency ``band`` is required.
    """

    geometry: object
    occupation: PhotonOccupation
    medium: object
    chamber: ChamberGeometry = None
    band: FrequencyBand = None

    def __post_init__(self):
        if not isinstance(self.geometry, (HelixSpec, FiberPath)):
            raise ValidationError("geometry must be a HelixSpec or FiberPath")
        if not isinstance(self.occupation, PhotonOccupation):
            raise ValidationError("occupation must be a PhotonOccupation")
        if not isinstance(self.medium, (GyrotropicMedium, DispersiveMedium)):
            raise ValidationError("medium must be a GyrotropicMedium or DispersiveMedium")
        if self.chamber is not None and not isinstance(self.chamber, ChamberGeometry):
            raise ValidationError("chamber must be a ChamberGeometry or None")
        if self.band is not None and not isinstance(self.band, FrequencyBand):
            raise ValidationError("band must be a FrequencyBand or None")
        if self.chamber is not None and self.band is None:
            raise ValidationError("a chamber requires a frequency band")


@dataclass(frozen=True)
class PhasePrediction:
    """Full prediction: solid angle (with cross-checks), phases, suppression, net."""

    omega: object
    omega_excess: object
    transport_holonomy: float
    phases: object
    suppression: object
    regime: str
    net_vacuum_phase: float
    cutoff_sensitivity: tuple


def _regime(report):
    if report.left_suppressed and report.right_suppressed:
        return REGIME_NONE_PRESENT
    if report.left_suppressed:
        return REGIME_RIGHT_ONLY
    if report.right_suppressed:
        return REGIME_LEFT_ONLY
    return REGIME_BOTH_PRESENT


def _net_vacuum_phase(regime, phases):
    # The suppressed branch contributes exactly zero; the surviving branch
    # keeps its +-Omega/2 zero-point term.  Both present (or neither) cancels.
    if regime == REGIME_RIGHT_ONLY:
        return phases.phi_vac_right
    if regime == REGIME_LEFT_ONLY:
        return phases.phi_vac_left
    return 0.0


def _check_signal_band(spec, n_grid):
    """Occupied signal photons must propagate above cutoff across the whole band."""
    occ = spec.occupation
    if spec.chamber is None or (occ.n_left == 0 and occ.n_right == 0):
        return
    _, k_plus, plus_ev, k_minus, minus_ev = branch_wave_numbers(spec.medium, spec.band, n_grid)
    k_min = spec.chamber.k_min
    checks = (
        ("left", occ.n_left, k_minus, minus_ev),
        ("right", occ.n_right, k_plus, plus_ev),
    )
    for side, n, k, ev in checks:
        if n == 0:
            continue
        if bool(ev.any()):
            raise SignalBandError(
                "occupied %s-handed signal is evanescent somewhere in the band" % side
            )
        if bool((k < k_min).any()):
            raise SignalBandError(
                "occupied %s-handed signal falls below the chamber cutoff within the band" % side
            )


def _resolve_path(geometry, samples_per_turn):
    if isinstance(geometry, HelixSpec):
        if samples_per_turn is not None:
            if (
                isinstance(samples_per_turn, bool)
                or not isinstance(samples_per_turn, int)
                or samples_per_turn < 16
            ):
                raise ValidationError("samples_per_turn override must be an integer >= 16")
            geometry = replace(geometry, samples_per_turn=samples_per_turn)
        return helix_to_path(geometry)
    if samples_per_turn is not None:
        raise ValidationError("samples_per_turn applies only to helix geometries")
    return geometry


def predict(
    spec,
    *,
    samples_per_turn=None,
    closure_tol=DEFAULT_CLOSURE_TOL,
    holonomy_tol=DEFAULT_HOLONOMY_TOL,
    agreement_factor=1.0,
    band_grid=DEFAULT_BAND_GRID,
):
    """Evaluate one experiment into a :class:`PhasePrediction`.

    Raises the underlying validation errors unchanged, plus
    :class:`~vacphase.errors.MethodDisagreementError` when the independent
    solid-angle computations fail to agree and
    :class:`~vacphase.errors.SignalBandError` when occupied signal photons
    would themselves be cut off by the chamber.
    """
    if not isinstance(spec, ExperimentSpec):
        raise ValidationError("predict expects an ExperimentSpec")
    path = _resolve_path(spec.geometry, samples_per_turn)
    trace = tangent_trace(path, closure_tol=closure_tol)
    line, excess, transport = solid_angle_with_checks(
        trace, holonomy_tol=holonomy_tol, agreement_factor=agreement_factor
    )
    phases = geometric_phases(spec.occupation, line)
    if spec.chamber is None:
        return PhasePrediction(
            omega=line,
            omega_excess=excess,
            transport_holonomy=transport,
            phases=phases,
            suppression=None,
            regime=REGIME_BOTH_PRESENT,
            net_vacuum_phase=0.0,
            cutoff_sensitivity=(),
        )
    _check_signal_band(spec, band_grid)
    report = suppression_report(spec.medium, spec.chamber, spec.band, band_grid)
    regime = _regime(report)
    sensitivity = []
    coefficients = sorted(set(SENSITIVITY_COEFFICIENTS) | {spec.chamber.cutoff_coefficient})
    for coefficient in coefficients:
        alt = replace(spec.chamber, cutoff_coefficient=coefficient)
        alt_report = suppression_report(spec.medium, alt, spec.band, band_grid)
        alt_regime = _regime(alt_report)
        sensitivity.append(
            CutoffSensitivity(
                cutoff_coefficient=coefficient,
                regime=alt_regime,
                net_vacuum_phase=_net_vacuum_phase(alt_regime, phases),
            )
        )
    return PhasePrediction(
        omega=line,
        omega_excess=excess,
        transport_holonomy=transport,
        phases=phases,
        suppression=report,
        regime=regime,
        net_vacuum_phase=_net_vacuum_phase(regime, phases),
        cutoff_sensitivity=tuple(sensitivity),
    )


@dataclass(frozen=True)
class SweepRow:
    """One theta sample of a sweep: the angle, 1 - cos(theta), and its prediction."""

    theta: float
    one_minus_cos_theta: float
    prediction: PhasePrediction


def sweep_theta(spec, thetas, **predict_kwargs):
    """Re-run :func:`predict` over a grid of helix tangent polar angles.

    The experiment must use a :class:`HelixSpec`; each theta in (0, pi/2]
    fixes the pitch as 2 pi R cos(theta) / sin(theta) at the experiment's
    helix radius.
    Rows are returned in input order.
    """
    if not isinstance(spec, ExperimentSpec):
        raise ValidationError("sweep_theta expects an ExperimentSpec")
    if not isinstance(spec.geometry, HelixSpec):
        raise ValidationError("sweep_theta requires a helix geometry")
    try:
        thetas = list(thetas)
    except TypeError:
        raise ValidationError("thetas must be an iterable of angles") from None
    if not thetas:
        raise DomainError("empty sweep grid")
    rows = []
    for theta in thetas:
        if isinstance(theta, bool) or not isinstance(theta, (int, float)) or not math.isfinite(theta):
            raise DomainError("sweep theta must be a finite number")
        if not 0.0 < theta <= math.pi / 2:
            raise DomainError("sweep theta %r outside (0, pi/2]" % (theta,))
        pitch = _TWO_PI * spec.geometry.radius * math.cos(theta) / math.sin(theta)
        helix = replace(spec.geometry, pitch=pitch)
        row_spec = ExperimentSpec(
            geometry=helix,
            occupation=spec.occupation,
            medium=spec.medium,
            chamber=spec.chamber,
            band=spec.band,
        )
        rows.append(
            SweepRow(
                theta=float(theta),
                one_minus_cos_theta=1.0 - math.cos(theta),
                prediction=predict(row_spec, **predict_kwargs),
            )
        )
    return rows
