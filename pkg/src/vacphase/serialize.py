"""Deterministic result serialization: canonical JSON and CSV documents.

The JSON writer guarantees byte-identical output for identical inputs: fixed
key order (insertion order of the document builders), floats rendered with 17
significant digits (round-trip exact for binary doubles), no dependence on
hash order or locale.  Angles are emitted in radians with auxiliary degree
and mod-2pi-reduced fields; solid angles are in steradians.

CSV output is one row per prediction with a mandatory header row, '.' decimal
separator and no locale dependence.
"""

import csv
import io
import json
import math

from .errors import ValidationError
from .holonomy import wrap_angle

_TWO_PI = 2.0 * math.pi


def format_float(x):
    """Render a float with 17 significant digits (exact round-trip)."""
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError("non-finite number cannot be serialized")
    return format(x, ".17g")


def _write_json(value, out, level, indent):
    pad = " " * (indent * (level + 1))
    closing_pad = " " * (indent * level)
    if value is None:
        out.write("null")
    elif isinstance(value, bool):
        out.write("true" if value else "false")
    elif isinstance(value, int):
        out.write(str(value))
    elif isinstance(value, float):
        out.write(format_float(value))
    elif isinstance(value, str):
        out.write(json.dumps(value))
    elif isinstance(value, dict):
        if not value:
            out.write("{}")
            return
        out.write("{\n")
        for i, (key, item) in enumerate(value.items()):
            if not isinstance(key, str):
                raise ValidationError("JSON object keys must be strings")
            out.write(pad)
            out.write(json.dumps(key))
            out.write(": ")
            _write_json(item, out, level + 1, indent)
            out.write(",\n" if i + 1 < len(value) else "\n")
        out.write(closing_pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.write("[]")
            return
        out.write("[\n")
        for i, item in enumerate(value):
            out.write(pad)
            _write_json(item, out, level + 1, indent)
            out.write(",\n" if i + 1 < len(value) else "\n")
        out.write(closing_pad + "]")
    else:
        raise ValidationError("cannot serialize %r" % type(value).__name__)


def dumps_canonical(doc, indent=2):
    """Serialize a document tree to canonical JSON text (trailing newline)."""
    out = io.StringIO()
    _write_json(doc, out, 0, indent)
    out.write("\n")
    return out.getvalue()


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    raise ValidationError("cannot serialize %r in CSV" % type(value).__name__)


def dumps_csv(rows):
    """Serialize a list of equal-keyed dicts to CSV text with a header row."""
    if not rows:
        raise ValidationError("CSV output requires at least one row")
    header = list(rows[0].keys())
    for row in rows:
        if list(row.keys()) != header:
            raise ValidationError("CSV rows must share one column set")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row.values()])
    return out.getvalue()


def angle_fields(name, value):
    """Radians, degrees and mod-2pi display fields for one angle."""
    return {
        name: value,
        name + "_deg": math.degrees(value),
        name + "_mod_2pi": wrap_angle(value),
    }


def omega_doc(line, excess, transport):
    """Solid-angle block: primary line-integral value plus the cross-checks."""
    return {
        "steradians": line.omega,
        "estimated_error_sr": line.estimated_error,
        "method": line.method,
        "cross_checks": {
            "spherical_excess_sr": excess.omega,
            "spherical_excess_error_sr": excess.estimated_error,
            "transport_holonomy_rad": transport,
            "transport_vs_line_mod_2pi_rad": abs(wrap_angle(transport - line.omega)),
        },
    }


def occupation_doc(occ):
    return {"n_left": occ.n_left, "n_right": occ.n_right}


def phases_doc(phases):
    doc = {"omega_sr": phases.omega}
    doc.update(angle_fields("phi_left", phases.phi_left))
    doc.update(angle_fields("phi_right", phases.phi_right))
    doc.update(angle_fields("phi_vac_left", phases.phi_vac_left))
    doc.update(angle_fields("phi_vac_right", phases.phi_vac_right))
    doc.update(angle_fields("phi_total", phases.phi_total))
    return doc


def suppression_doc(report):
    if report is None:
        return None
    return {
        "left_suppressed": report.left_suppressed,
        "right_suppressed": report.right_suppressed,
        "omega_min_rad_per_s": report.band[0],
        "omega_max_rad_per_s": report.band[1],
        "margin_left": report.margin_left,
        "margin_right": report.margin_right,
    }


def indices_doc(indices):
    return {
        "n_plus_sq": indices.n_plus_sq,
        "n_minus_sq": indices.n_minus_sq,
        "n_plus": indices.n_plus,
        "n_minus": indices.n_minus,
        "plus_evanescent": indices.plus_evanescent,
        "minus_evanescent": indices.minus_evanescent,
    }


def phase_command_doc(line, excess, transport, phases, occ):
    return {
        "omega": omega_doc(line, excess, transport),
        "occupation": occupation_doc(occ),
        "phases": phases_doc(phases),
    }


def prediction_doc(pred, occ):
    doc = {
        "omega": omega_doc(pred.omega, pred.omega_excess, pred.transport_holonomy),
        "occupation": occupation_doc(occ),
        "phases": phases_doc(pred.phases),
        "suppression": suppression_doc(pred.suppression),
        "regime": pred.regime,
    }
    doc.update(angle_fields("net_vacuum_phase", pred.net_vacuum_phase))
    doc["cutoff_sensitivity"] = [
        {
            "cutoff_coefficient": entry.cutoff_coefficient,
            "regime": entry.regime,
            "net_vacuum_phase": entry.net_vacuum_phase,
        }
        for entry in pred.cutoff_sensitivity
    ]
    return doc


def sweep_doc(rows, occ):
    return {
        "rows": [
            {
                "theta": row.theta,
                "one_minus_cos_theta": row.one_minus_cos_theta,
                "prediction": prediction_doc(row.prediction, occ),
            }
            for row in rows
        ]
    }


def _suppression_cells(report):
    if report is None:
        return {
            "left_suppressed": None,
            "right_suppressed": None,
            "margin_left": None,
            "margin_right": None,
        }
    return {
        "left_suppressed": report.left_suppressed,
        "right_suppressed": report.right_suppressed,
        "margin_left": report.margin_left,
        "margin_right": report.margin_right,
    }


def prediction_csv_row(pred, head=None):
    """Flat CSV row for one prediction; ``head`` prepends sweep columns."""
    row = dict(head or {})
    row.update(
        {
            "omega_sr": pred.omega.omega,
            "omega_error_sr": pred.omega.estimated_error,
            "phi_left": pred.phases.phi_left,
            "phi_right": pred.phases.phi_right,
            "phi_vac_left": pred.phases.phi_vac_left,
            "phi_vac_right": pred.phases.phi_vac_right,
            "phi_total": pred.phases.phi_total,
            "regime": pred.regime,
            "net_vacuum_phase": pred.net_vacuum_phase,
        }
    )
    row.update(_suppression_cells(pred.suppression))
    return row


def phase_csv_row(line, excess, transport, phases):
    return {
        "omega_sr": line.omega,
        "omega_error_sr": line.estimated_error,
        "spherical_excess_sr": excess.omega,
        "transport_holonomy_rad": transport,
        "phi_left": phases.phi_left,
        "phi_right": phases.phi_right,
        "phi_vac_left": phases.phi_vac_left,
        "phi_vac_right": phases.phi_vac_right,
        "phi_total": phases.phi_total,
    }


def indices_csv_row(indices, head=None):
    row = dict(head or {})
    row.update(indices_doc(indices))
    return row


def filter_csv_row(report, k_min):
    return {
        "left_suppressed": report.left_suppressed,
        "right_suppressed": report.right_suppressed,
        "omega_min_rad_per_s": report.band[0],
        "omega_max_rad_per_s": report.band[1],
        "margin_left": report.margin_left,
        "margin_right": report.margin_right,
        "k_min_rad_per_m": k_min,
    }
