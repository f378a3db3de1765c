"""Geometric phases of guided photons from occupations and enclosed solid angle.

For occupation numbers (n_left, n_right) and accumulated solid angle Omega:

* left-handed mode:   phi_left  = -(n_left  + 1/2) * Omega
* right-handed mode:  phi_right = +(n_right + 1/2) * Omega

The half-integer pieces are the occupation-independent zero-point (vacuum)
contributions -Omega/2 and +Omega/2, which cancel exactly when both
polarizations' vacuum modes are present.  The observable total is the sum
phi_left + phi_right; algebraically that equals (n_right - n_left) * Omega.

Floating-point contract
-----------------------
``phi_left``, ``phi_right`` and the vacuum fields are single correctly
rounded products (n + 1/2 is exact in binary floating point).  ``phi_total``
is the exact floating-point sum ``phi_left + phi_right`` and is bit-for-bit
identical to :func:`total_observed_phase`.  It can differ from the singly
rounded product (n_right - n_left) * Omega by at most one unit in the last
place, because the two rounded products cannot always sum to the rounded
product of the difference.  The vacuum fields always sum to exactly zero.
Phases are reported unreduced (not mod 2 pi); reduced values are emitted as
auxiliary display fields by the CLI layer.
"""

from dataclasses import dataclass

from .errors import ValidationError
from .holonomy import SolidAngle


@dataclass(frozen=True)
class PhotonOccupation:
    """Sharp photon counts in the left/right circularly polarized modes."""

    n_left: int
    n_right: int

    def __post_init__(self):
        for name in ("n_left", "n_right"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValidationError("%s must be a non-negative integer" % name)


@dataclass(frozen=True)
class PhaseResult:
    """Per-polarization geometric phases (radians) for one solid angle (steradians)."""

    phi_left: float
    phi_right: float
    phi_vac_left: float
    phi_vac_right: float
    phi_total: float
    omega: float


def _omega_value(omega):
    if isinstance(omega, SolidAngle):
        return omega.omega
    if isinstance(omega, bool) or not isinstance(omega, (int, float)):
        raise ValidationError("omega must be a SolidAngle or a number")
    return float(omega)


def geometric_phases(occ, omega):
    """Evaluate the per-mode geometric phases for given occupations and solid angle."""
    if not isinstance(occ, PhotonOccupation):
        raise ValidationError("occ must be a PhotonOccupation")
    om = _omega_value(omega)
    phi_left = -((occ.n_left + 0.5) * om)
    phi_right = (occ.n_right + 0.5) * om
    half = 0.5 * om
    return PhaseResult(
        phi_left=phi_left,
        phi_right=phi_right,
        phi_vac_left=-half,
        phi_vac_right=half,
        phi_total=phi_left + phi_right,
        omega=om,
    )


def vacuum_phases(omega):
    """Zero-point contributions (left, right) = (-Omega/2, +Omega/2)."""
    om = _omega_value(omega)
    half = 0.5 * om
    return (-half, half)


def total_observed_phase(occ, omega):
    """Sum of both modes' phases; equals (n_right - n_left) * Omega up to one rounding.

    Computed as the floating-point sum of the two singly rounded per-mode
    phases, so it is bit-for-bit consistent with :func:`geometric_phases`.
    The vacuum halves cancel identically.
    """
    if not isinstance(occ, PhotonOccupation):
        raise ValidationError("occ must be a PhotonOccupation")
    om = _omega_value(omega)
    phi_left = -((occ.n_left + 0.5) * om)
    phi_right = (occ.n_right + 0.5) * om
    return phi_left + phi_right
