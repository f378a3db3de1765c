"""Geometric phases of guided photons on curved fibre paths.

The package predicts the polarization-dependent phase a photon picks up when
its wave vector is steered around a closed loop on the direction sphere, for
example by winding an optical fibre into a helix.  Each circular polarization
acquires a phase proportional to the solid angle of that loop, with equal and
opposite half-quantum offsets contributed by the zero-point field.  A
metallic chamber with a long-wavelength mode cutoff and a gyrotropic fibre
medium can together remove one polarization's vacuum contribution, leaving a
net vacuum phase that the :mod:`vacphase.predictor` module resolves per
experiment.

Main entry points:

* :func:`helix_to_path` / :class:`FiberPath` — build fibre centrelines.
* :func:`tangent_trace` — differentiate a centreline into a closed loop of
  unit tangents.
* :func:`solid_angle_line_integral`, :func:`solid_angle_spherical_excess`,
  :func:`parallel_transport_holonomy` — three independent solid-angle /
  holonomy evaluations, cross-checked by :func:`solid_angle_with_checks`.
* :func:`geometric_phases`, :func:`vacuum_phases` — phases per polarization.
* :func:`circular_indices`, :func:`suppression_report` — medium response and
  chamber filtering.
* :func:`predict`, :func:`sweep_theta` — full experiment pipeline.
"""

from .errors import (
    ClosureError,
    DomainError,
    MethodDisagreementError,
    PoleProximityError,
    SignalBandError,
    VacphaseError,
    ValidationError,
)
from .geometry import (
    DEFAULT_CLOSURE_TOL,
    POLE_GUARD,
    FiberPath,
    HelixSpec,
    TangentTrace,
    angle_between,
    helix_to_path,
    tangent_trace,
)
from .holonomy import (
    DEFAULT_HOLONOMY_TOL,
    METHOD_CLOSED_FORM,
    METHOD_LINE_INTEGRAL,
    METHOD_PARALLEL_TRANSPORT,
    METHOD_SPHERICAL_EXCESS,
    SolidAngle,
    parallel_transport_holonomy,
    solid_angle_closed_form,
    solid_angle_line_integral,
    solid_angle_spherical_excess,
    solid_angle_with_checks,
    wrap_angle,
)
from .phases import (
    PhaseResult,
    PhotonOccupation,
    geometric_phases,
    total_observed_phase,
    vacuum_phases,
)
from .media import (
    SPEED_OF_LIGHT,
    CircularIndices,
    DispersiveMedium,
    GyrotropicMedium,
    circular_indices,
    wave_number,
)
from .chamber import (
    ChamberGeometry,
    FrequencyBand,
    SuppressionReport,
    branch_wave_numbers,
    mode_allowed,
    suppression_report,
)
from .predictor import (
    REGIME_BOTH_PRESENT,
    REGIME_LEFT_ONLY,
    REGIME_NONE_PRESENT,
    REGIME_RIGHT_ONLY,
    CutoffSensitivity,
    ExperimentSpec,
    PhasePrediction,
    SweepRow,
    predict,
    sweep_theta,
)

__version__ = "0.1.0"

__all__ = [
    "ChamberGeometry",
    "CircularIndices",
    "ClosureError",
    "CutoffSensitivity",
    "DEFAULT_CLOSURE_TOL",
    "DEFAULT_HOLONOMY_TOL",
    "DispersiveMedium",
    "DomainError",
    "ExperimentSpec",
    "FiberPath",
    "FrequencyBand",
    "GyrotropicMedium",
    "HelixSpec",
    "METHOD_CLOSED_FORM",
    "METHOD_LINE_INTEGRAL",
    "METHOD_PARALLEL_TRANSPORT",
    "METHOD_SPHERICAL_EXCESS",
    "MethodDisagreementError",
    "PhasePrediction",
    "PhaseResult",
    "PhotonOccupation",
    "POLE_GUARD",
    "PoleProximityError",
    "REGIME_BOTH_PRESENT",
    "REGIME_LEFT_ONLY",
    "REGIME_NONE_PRESENT",
    "REGIME_RIGHT_ONLY",
    "SPEED_OF_LIGHT",
    "SignalBandError",
    "SolidAngle",
    "SuppressionReport",
    "SweepRow",
    "TangentTrace",
    "VacphaseError",
    "ValidationError",
    "angle_between",
    "branch_wave_numbers",
    "circular_indices",
    "geometric_phases",
    "helix_to_path",
    "mode_allowed",
    "parallel_transport_holonomy",
    "predict",
    "solid_angle_closed_form",
    "solid_angle_line_integral",
    "solid_angle_spherical_excess",
    "solid_angle_with_checks",
    "suppression_report",
    "sweep_theta",
    "tangent_trace",
    "total_observed_phase",
    "vacuum_phases",
    "wave_number",
    "wrap_angle",
]
