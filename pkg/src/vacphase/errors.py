"""Exception hierarchy for the vacphase package.

Everything raised on purpose derives from :class:`VacphaseError` so callers can
catch one base class.  The command-line front end maps subclasses onto exit
codes: input/physics validation problems exit with status 1, while a
:class:`MethodDisagreementError` (the independent solid-angle methods failing
to agree) exits with status 2.
"""


class VacphaseError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(VacphaseError):
    """Malformed or out-of-contract input (bad JSON shape, unknown key, bad type)."""


class DomainError(ValidationError):
    """A numeric argument lies outside the mathematical domain of an operation."""


class ClosureError(VacphaseError):
    """A tangent trace declared closed does not close within tolerance."""


class PoleProximityError(VacphaseError):
    """A trace sample lies too close to a coordinate pole, where azimuth is undefined."""


class SignalBandError(VacphaseError):
    """Occupied signal photons would themselves fall below the chamber cutoff."""


class MethodDisagreementError(VacphaseError):
    """Independent solid-angle computations disagree beyond their error budget."""
