"""Circular refractive indices of gyrotropic media for axial propagation.

The material response is a pair of tensors with equal diagonal transverse
components (eps1, mu1), antisymmetric transverse off-diagonal components
(eps2, mu2) and an independent longitudinal component (eps3, mu3).  For a
wave vector along the tensor axis the two circular polarizations see

    n_plus^2  = (eps1 + eps2) * (mu1 + mu2)      (right-handed)
    n_minus^2 = (eps1 - eps2) * (mu1 - mu2)      (left-handed)

A negative square marks an evanescent branch: the wave cannot propagate and
the stored index is the attenuation index sqrt(|n^2|).  The longitudinal
components enter no axial-propagation formula; they are stored and validated
finite, nothing more.

Propagation is treated as locally axial (wave vector along the local fibre
tangent); no oblique-incidence eigenproblem is solved.  Material dispersion
is off by default; :class:`DispersiveMedium` supplies tabulated tensors with
piecewise-linear interpolation for band calculations.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError

#: Vacuum speed of light, m/s.
SPEED_OF_LIGHT = 299792458.0


def _check_number(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError("%s must be a number" % name)
    if not math.isfinite(value):
        raise ValidationError("%s must be finite" % name)
    return float(value)


@dataclass(frozen=True)
class GyrotropicMedium:
    """Frequency-independent tensor components (relative, dimensionless)."""

    eps1: float
    eps2: float
    eps3: float
    mu1: float
    mu2: float
    mu3: float

    def __post_init__(self):
        for name in ("eps1", "eps2", "eps3", "mu1", "mu2", "mu3"):
            object.__setattr__(self, name, _check_number(getattr(self, name), name))
        if self.eps1 <= 0:
            raise ValidationError("eps1 (diagonal transverse permittivity) must be positive")
        if self.mu1 <= 0:
            raise ValidationError("mu1 (diagonal transverse permeability) must be positive")

    def at(self, omega):
        """Tensor components at angular frequency ``omega`` (constant here)."""
        return self

    def transverse_profile(self, omegas):
        """(eps1, eps2, mu1, mu2) arrays over a frequency grid."""
        omegas = np.asarray(omegas, dtype=np.float64)
        shape = omegas.shape
        return (
            np.full(shape, self.eps1),
            np.full(shape, self.eps2),
            np.full(shape, self.mu1),
            np.full(shape, self.mu2),
        )


@dataclass(eq=False)
class DispersiveMedium:
    """Tabulated tensor components with piecewise-linear interpolation in omega.

    ``omegas`` must be strictly increasing and positive; ``eps`` and ``mu``
    are (m, 3) arrays of (component-1, component-2, component-3) rows.  Band
    calculations must stay inside the tabulated range — no extrapolation.
    """

    omegas: np.ndarray
    eps: np.ndarray
    mu: np.ndarray

    def __post_init__(self):
        self.omegas = np.asarray(self.omegas, dtype=np.float64)
        self.eps = np.asarray(self.eps, dtype=np.float64)
        self.mu = np.asarray(self.mu, dtype=np.float64)
        if self.omegas.ndim != 1 or self.omegas.shape[0] < 2:
            raise ValidationError("a dispersive table needs at least 2 frequency nodes")
        m = self.omegas.shape[0]
        if self.eps.shape != (m, 3) or self.mu.shape != (m, 3):
            raise ValidationError("eps and mu tables must be (m, 3) arrays matching omegas")
        if not np.all(np.isfinite(self.omegas)) or np.any(self.omegas <= 0):
            raise ValidationError("table frequencies must be positive and finite")
        if np.any(np.diff(self.omegas) <= 0):
            raise ValidationError("table frequencies must be strictly increasing")
        if not (np.all(np.isfinite(self.eps)) and np.all(np.isfinite(self.mu))):
            raise ValidationError("table tensor components must be finite")
        if np.any(self.eps[:, 0] <= 0) or np.any(self.mu[:, 0] <= 0):
            raise ValidationError("eps1 and mu1 must be positive at every table node")

    def _check_range(self, omegas):
        omegas = np.asarray(omegas, dtype=np.float64)
        if np.any(omegas < self.omegas[0]) or np.any(omegas > self.omegas[-1]):
            raise DomainError(
                "frequency outside the tabulated range [%g, %g] rad/s"
                % (self.omegas[0], self.omegas[-1])
            )
        return omegas

    def at(self, omega):
        """Interpolated constant-tensor medium at one angular frequency."""
        omega = float(self._check_range(_check_number(omega, "omega")))
        comps = [float(np.interp(omega, self.omegas, self.eps[:, i])) for i in range(3)]
        comps += [float(np.interp(omega, self.omegas, self.mu[:, i])) for i in range(3)]
        return GyrotropicMedium(*comps)

    def transverse_profile(self, omegas):
        """(eps1, eps2, mu1, mu2) arrays over a frequency grid (interpolated)."""
        omegas = self._check_range(omegas)
        return (
            np.interp(omegas, self.omegas, self.eps[:, 0]),
            np.interp(omegas, self.omegas, self.eps[:, 1]),
            np.interp(omegas, self.omegas, self.mu[:, 0]),
            np.interp(omegas, self.omegas, self.mu[:, 1]),
        )


@dataclass(frozen=True)
class CircularIndices:
    """Refractive indices of the two circular polarizations.

    The "+" branch is the right-handed polarization, "-" the left-handed.
    For an evanescent branch (squared index negative) the index field holds
    the attenuation index sqrt(|n^2|) and the corresponding flag is set.
    """

    n_plus_sq: float
    n_minus_sq: float
    n_plus: float
    n_minus: float
    plus_evanescent: bool
    minus_evanescent: bool

    @property
    def n_right(self):
        return self.n_plus

    @property
    def n_left(self):
        return self.n_minus

    @property
    def right_evanescent(self):
        return self.plus_evanescent

    @property
    def left_evanescent(self):
        return self.minus_evanescent


def circular_indices(medium):
    """Circular-polarization indices n_+/- of a (constant) gyrotropic medium."""
    if not isinstance(medium, GyrotropicMedium):
        raise ValidationError("circular_indices expects a GyrotropicMedium")
    plus_sq = (medium.eps1 + medium.eps2) * (medium.mu1 + medium.mu2)
    minus_sq = (medium.eps1 - medium.eps2) * (medium.mu1 - medium.mu2)
    plus_ev = plus_sq < 0.0
    minus_ev = minus_sq < 0.0
    return CircularIndices(
        n_plus_sq=plus_sq,
        n_minus_sq=minus_sq,
        n_plus=math.sqrt(abs(plus_sq)),
        n_minus=math.sqrt(abs(minus_sq)),
        plus_evanescent=plus_ev,
        minus_evanescent=minus_ev,
    )


def wave_number(n, omega_opt):
    """k = n * omega / c for a propagating index n >= 0 and frequency omega > 0."""
    n = _check_number(n, "refractive index")
    omega_opt = _check_number(omega_opt, "omega_opt")
    if n < 0:
        raise DomainError("refractive index must be non-negative")
    if omega_opt <= 0:
        raise DomainError("optical angular frequency must be positive")
    return n * omega_opt / SPEED_OF_LIGHT
