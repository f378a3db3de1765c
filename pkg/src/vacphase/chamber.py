"""Finite-chamber vacuum-mode cutoff and per-polarization suppression.

A sealed conducting enclosure of smallest confining scale ``a`` supports no
electromagnetic mode with wave number below ``k_min = coefficient * pi / a``.
The coefficient defaults to 1 but is configuration (the physical cutoff is an
order-of-magnitude statement), and predictions also report the outcome at
coefficients 0.5 and 2.0.

A circular-polarization branch is *suppressed* when its zero-point field has
no mode anywhere in the stated frequency band: at every band frequency the
branch is either evanescent (cannot propagate at all — the strongest form of
suppression) or its wave number falls below the cutoff.  The all-frequency
quantifier is deliberate: a partially present zero-point branch would leave
an uncancelled partial phase that this model does not cover.

Conventions: a wave number exactly at the cutoff counts as allowed (boundary
set of measure zero, documented rather than physical).  The reported margins
are the band maxima of k / k_min per branch, so ``margin < 1`` is equivalent
to suppression for a branch that propagates somewhere in the band; a branch
evanescent across the whole band reports margin 0.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .media import SPEED_OF_LIGHT, DispersiveMedium, GyrotropicMedium

_TWO_PI = 2.0 * math.pi

#: Default number of evenly spaced band frequencies examined by the filter.
DEFAULT_BAND_GRID = 1024


@dataclass(frozen=True)
class ChamberGeometry:
    """Smallest confining length scale ``a`` (metres) plus the cutoff coefficient.

    ``a = math.inf`` models free space (cutoff 0); the JSON input schema only
    accepts finite chambers — use an absent chamber for free space there.
    """

    a: float
    cutoff_coefficient: float = 1.0

    def __post_init__(self):
        if isinstance(self.a, bool) or not isinstance(self.a, (int, float)):
            raise ValidationError("chamber scale a must be a number")
        if math.isnan(self.a) or self.a <= 0:
            raise ValidationError("chamber scale a must be positive")
        c = self.cutoff_coefficient
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise ValidationError("cutoff_coefficient must be a number")
        if not (math.isfinite(c) and c > 0):
            raise ValidationError("cutoff_coefficient must be positive and finite")

    @property
    def k_min(self):
        """Smallest supported wave number, rad/m (0 for an infinite chamber)."""
        if math.isinf(self.a):
            return 0.0
        return self.cutoff_coefficient * math.pi / self.a


@dataclass(frozen=True)
class FrequencyBand:
    """Closed band of angular frequencies [omega_min, omega_max], rad/s."""

    omega_min: float
    omega_max: float

    def __post_init__(self):
        for name in ("omega_min", "omega_max"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError("%s must be a finite number" % name)
        if not 0 < self.omega_min <= self.omega_max:
            raise DomainError("band must satisfy 0 < omega_min <= omega_max")

    @classmethod
    def from_vacuum_wavelengths(cls, lambda_min, lambda_max):
        """Band from vacuum wavelengths (metres), via omega = 2 pi c / lambda."""
        for name, v in (("lambda_vac_min", lambda_min), ("lambda_vac_max", lambda_max)):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise DomainError("%s must be a number" % name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError("%s must be positive and finite" % name)
        w1 = _TWO_PI * SPEED_OF_LIGHT / lambda_min
        w2 = _TWO_PI * SPEED_OF_LIGHT / lambda_max
        return cls(omega_min=min(w1, w2), omega_max=max(w1, w2))

    def grid(self, n=DEFAULT_BAND_GRID):
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValidationError("band grid size must be a positive integer")
        if n == 1:
            return np.array([self.omega_min])
        return np.linspace(self.omega_min, self.omega_max, n)


@dataclass(frozen=True)
class SuppressionReport:
    """Outcome of the cutoff filter for both circular polarizations over a band."""

    left_suppressed: bool
    right_suppressed: bool
    band: tuple
    margin_left: float
    margin_right: float


def mode_allowed(k, chamber):
    """True when a mode of wave number ``k`` exists in the chamber (k >= k_min)."""
    if isinstance(k, bool) or not isinstance(k, (int, float)) or math.isnan(k):
        raise DomainError("wave number must be a number")
    if k < 0:
        raise DomainError("wave number must be non-negative")
    if not isinstance(chamber, ChamberGeometry):
        raise ValidationError("mode_allowed expects a ChamberGeometry")
    return k >= chamber.k_min


def branch_wave_numbers(medium, band, n_grid=DEFAULT_BAND_GRID):
    """Per-branch (k, evanescent) arrays over the band grid.

    Returns ``(omegas, k_plus, plus_evanescent, k_minus, minus_evanescent)``;
    wave numbers at evanescent grid points are 0 (no propagating mode).
    """
    if not isinstance(medium, (GyrotropicMedium, DispersiveMedium)):
        raise ValidationError("medium must be a GyrotropicMedium or DispersiveMedium")
    if not isinstance(band, FrequencyBand):
        raise ValidationError("band must be a FrequencyBand")
    omegas = band.grid(n_grid)
    e1, e2, m1, m2 = medium.transverse_profile(omegas)
    plus_sq = (e1 + e2) * (m1 + m2)
    minus_sq = (e1 - e2) * (m1 - m2)
    plus_ev = plus_sq < 0.0
    minus_ev = minus_sq < 0.0
    k_plus = np.where(plus_ev, 0.0, np.sqrt(np.abs(plus_sq)) * omegas / SPEED_OF_LIGHT)
    k_minus = np.where(minus_ev, 0.0, np.sqrt(np.abs(minus_sq)) * omegas / SPEED_OF_LIGHT)
    return omegas, k_plus, plus_ev, k_minus, minus_ev


def _branch_state(k, evanescent, k_min):
    """(suppressed, margin) for one branch given grid arrays and the cutoff."""
    if bool(np.all(evanescent)):
        return True, 0.0
    if k_min == 0.0:
        return False, math.inf
    suppressed = bool(np.all(evanescent | (k < k_min)))
    margin = float(np.max(k[~evanescent]) / k_min)
    return suppressed, margin


def suppression_report(medium, chamber, band, n_grid=DEFAULT_BAND_GRID):
    """Decide which circular polarization's zero-point field survives the chamber."""
    if not isinstance(chamber, ChamberGeometry):
        raise ValidationError("chamber must be a ChamberGeometry")
    _, k_plus, plus_ev, k_minus, minus_ev = branch_wave_numbers(medium, band, n_grid)
    k_min = chamber.k_min
    right_sup, margin_right = _branch_state(k_plus, plus_ev, k_min)
    left_sup, margin_left = _branch_state(k_minus, minus_ev, k_min)
    return SuppressionReport(
        left_suppressed=left_sup,
        right_suppressed=right_sup,
        band=(band.omega_min, band.omega_max),
        margin_left=margin_left,
        margin_right=margin_right,
    )
