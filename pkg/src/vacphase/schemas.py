"""Strict parsing of the JSON input documents into domain objects.

Every parser rejects unknown keys, wrong types, and missing required fields
with a :class:`~vacphase.errors.ValidationError` naming the offending key.
Numbers are plain JSON decimals in SI units (metres, radians, rad/s); fields
documented as integers must be JSON integers, not floats.
"""

import math

from .chamber import ChamberGeometry, FrequencyBand
from .errors import ValidationError
from .geometry import FiberPath, HelixSpec
from .media import DispersiveMedium, GyrotropicMedium
from .phases import PhotonOccupation
from .predictor import ExperimentSpec


def _object(value, where):
    if not isinstance(value, dict):
        raise ValidationError("%s must be a JSON object" % where)
    return value


def _keys(obj, where, required=(), optional=()):
    allowed = set(required) | set(optional)
    for key in obj:
        if key not in allowed:
            raise ValidationError("unknown key %r in %s" % (key, where))
    for key in required:
        if key not in obj:
            raise ValidationError("missing required key %r in %s" % (key, where))


def _number(value, where, finite=True):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError("%s must be a number" % where)
    if finite and not math.isfinite(value):
        raise ValidationError("%s must be finite" % where)
    return float(value)


def _integer(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("%s must be an integer" % where)
    return value


def _boolean(value, where):
    if not isinstance(value, bool):
        raise ValidationError("%s must be a boolean" % where)
    return value


def _triple(value, where):
    if not isinstance(value, list) or len(value) != 3:
        raise ValidationError("%s must be a list of 3 numbers" % where)
    return [_number(v, "%s[%d]" % (where, i)) for i, v in enumerate(value)]


def parse_helix(obj, where="helix"):
    _object(obj, where)
    _keys(obj, where, required=("radius", "pitch", "turns"), optional=("samples_per_turn",))
    return HelixSpec(
        radius=_number(obj["radius"], where + ".radius"),
        pitch=_number(obj["pitch"], where + ".pitch"),
        turns=_integer(obj["turns"], where + ".turns"),
        samples_per_turn=_integer(obj.get("samples_per_turn", 3600), where + ".samples_per_turn"),
    )


def parse_path(obj, where="path"):
    _object(obj, where)
    _keys(obj, where, required=("points",), optional=("closed_tangent",))
    points = obj["points"]
    if not isinstance(points, list):
        raise ValidationError("%s.points must be a list of [x, y, z] positions" % where)
    parsed = [_triple(p, "%s.points[%d]" % (where, i)) for i, p in enumerate(points)]
    closed = _boolean(obj.get("closed_tangent", True), where + ".closed_tangent")
    return FiberPath(points=parsed, closed_tangent=closed)


def parse_occupation(obj, where="occupation"):
    if obj is None:
        return PhotonOccupation(n_left=0, n_right=0)
    _object(obj, where)
    _keys(obj, where, required=("n_left", "n_right"))
    return PhotonOccupation(
        n_left=_integer(obj["n_left"], where + ".n_left"),
        n_right=_integer(obj["n_right"], where + ".n_right"),
    )


def parse_medium(obj, where="medium"):
    _object(obj, where)
    if "dispersive" in obj:
        _keys(obj, where, required=("dispersive",))
        rows = obj["dispersive"]
        if not isinstance(rows, list) or len(rows) < 2:
            raise ValidationError(
                "%s.dispersive must be a list of at least 2 {omega, eps, mu} rows" % where
            )
        omegas, eps, mu = [], [], []
        for i, row in enumerate(rows):
            row_where = "%s.dispersive[%d]" % (where, i)
            _object(row, row_where)
            _keys(row, row_where, required=("omega", "eps", "mu"))
            omegas.append(_number(row["omega"], row_where + ".omega"))
            eps.append(_triple(row["eps"], row_where + ".eps"))
            mu.append(_triple(row["mu"], row_where + ".mu"))
        return DispersiveMedium(omegas=omegas, eps=eps, mu=mu)
    _keys(obj, where, required=("eps", "mu"))
    e = _triple(obj["eps"], where + ".eps")
    m = _triple(obj["mu"], where + ".mu")
    return GyrotropicMedium(eps1=e[0], eps2=e[1], eps3=e[2], mu1=m[0], mu2=m[1], mu3=m[2])


def parse_chamber(obj, where="chamber"):
    _object(obj, where)
    _keys(obj, where, required=("a",), optional=("cutoff_coefficient",))
    # Finite only in JSON input: free space is expressed by omitting the chamber.
    a = _number(obj["a"], where + ".a")
    coefficient = _number(obj.get("cutoff_coefficient", 1.0), where + ".cutoff_coefficient")
    return ChamberGeometry(a=a, cutoff_coefficient=coefficient)


def parse_band(obj, where="band"):
    _object(obj, where)
    if "lambda_vac_min" in obj or "lambda_vac_max" in obj:
        _keys(obj, where, required=("lambda_vac_min", "lambda_vac_max"))
        return FrequencyBand.from_vacuum_wavelengths(
            _number(obj["lambda_vac_min"], where + ".lambda_vac_min"),
            _number(obj["lambda_vac_max"], where + ".lambda_vac_max"),
        )
    _keys(obj, where, required=("omega_min", "omega_max"))
    return FrequencyBand(
        omega_min=_number(obj["omega_min"], where + ".omega_min"),
        omega_max=_number(obj["omega_max"], where + ".omega_max"),
    )


def _parse_geometry(obj, where):
    has_helix = "helix" in obj
    has_path = "path" in obj
    if has_helix == has_path:
        raise ValidationError("exactly one of 'helix' or 'path' must be present in %s" % where)
    if has_helix:
        return parse_helix(obj["helix"], where + ".helix")
    return parse_path(obj["path"], where + ".path")


def parse_phase_input(obj, where="input"):
    """Input for the `phase` command: geometry plus optional occupation."""
    _object(obj, where)
    _keys(obj, where, optional=("helix", "path", "occupation"))
    geometry = _parse_geometry(obj, where)
    occupation = parse_occupation(obj.get("occupation"), where + ".occupation")
    return geometry, occupation


def parse_filter_input(obj, where="input"):
    """Input for the `filter` command: medium, chamber and band."""
    _object(obj, where)
    _keys(obj, where, required=("medium", "chamber", "band"))
    return (
        parse_medium(obj["medium"], where + ".medium"),
        parse_chamber(obj["chamber"], where + ".chamber"),
        parse_band(obj["band"], where + ".band"),
    )


def parse_experiment(obj, where="input"):
    """Full experiment document: geometry, occupation, medium, chamber, band."""
    _object(obj, where)
    _keys(obj, where, optional=("helix", "path", "occupation", "medium", "chamber", "band"))
    if "medium" not in obj:
        raise ValidationError("missing required key 'medium' in %s" % where)
    geometry = _parse_geometry(obj, where)
    return ExperimentSpec(
        geometry=geometry,
        occupation=parse_occupation(obj.get("occupation"), where + ".occupation"),
        medium=parse_medium(obj["medium"], where + ".medium"),
        chamber=parse_chamber(obj["chamber"], where + ".chamber") if "chamber" in obj else None,
        band=parse_band(obj["band"], where + ".band") if "band" in obj else None,
    )


def parse_sweep_input(obj, where="input"):
    """Sweep document: an experiment plus the list of tangent angles."""
    _object(obj, where)
    _keys(
        obj,
        where,
        required=("thetas",),
        optional=("helix", "path", "occupation", "medium", "chamber", "band"),
    )
    thetas = obj["thetas"]
    if not isinstance(thetas, list):
        raise ValidationError("%s.thetas must be a list of angles in radians" % where)
    thetas = [_number(t, "%s.thetas[%d]" % (where, i)) for i, t in enumerate(thetas)]
    experiment = {k: v for k, v in obj.items() if k != "thetas"}
    return parse_experiment(experiment, where), thetas
