"""Command-line front end.

Commands
--------
phase    geometric phases of a helix or sampled path (plus solid-angle checks)
medium   circular refractive indices of a gyrotropic medium
filter   chamber-cutoff suppression verdict for a medium over a band
predict  full experiment: solid angle, phases, suppression, net vacuum phase
sweep    predict across a grid of helix tangent angles

Exit codes: 0 success; 1 validation error (malformed input, bad value,
unusable geometry); 2 numerical-consistency error (the independent
solid-angle methods disagree beyond tolerance).  Each failure prints a
single-line diagnostic to stderr.
"""

import argparse
import json
import sys
from dataclasses import replace

from .errors import MethodDisagreementError, VacphaseError, ValidationError
from .geometry import DEFAULT_CLOSURE_TOL, tangent_trace
from .holonomy import DEFAULT_HOLONOMY_TOL, solid_angle_with_checks
from .media import DispersiveMedium, circular_indices
from .chamber import suppression_report
from .phases import geometric_phases
from .predictor import _resolve_path, predict, sweep_theta
from . import schemas, serialize

_TOLERANCE_KEYS = ("holonomy_mod_2pi", "method_agreement_factor")


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors by default; 2 is reserved
    # here for numerical-consistency failures, so usage errors map to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "error: %s\n" % message)


def _build_parser():
    parser = _ArgumentParser(
        prog="vacphase",
        description="Geometric-phase predictions for light guided along curved fibres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, sampling=False, cutoff=False):
        p.add_argument("--input", required=True, help="input JSON document")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default="-", help="output file, or '-' for stdout")
        if sampling:
            p.add_argument(
                "--samples-per-turn",
                type=int,
                default=None,
                help="override helix sampling density",
            )
            p.add_argument(
                "--closure-tol",
                type=float,
                default=DEFAULT_CLOSURE_TOL,
                help="closed-trace gap tolerance in radians",
            )
            p.add_argument(
                "--tolerance",
                action="append",
                default=[],
                metavar="KEY=VALUE",
                help="numeric tolerance override; keys: %s" % ", ".join(_TOLERANCE_KEYS),
            )
        if cutoff:
            p.add_argument(
                "--cutoff-coefficient",
                type=float,
                default=None,
                help="override the chamber cutoff coefficient",
            )

    common(sub.add_parser("phase", help="geometric phases of one fibre shape"), sampling=True)
    common(sub.add_parser("medium", help="circular refractive indices"))
    common(sub.add_parser("filter", help="chamber suppression verdict"), cutoff=True)
    common(
        sub.add_parser("predict", help="full experiment prediction"),
        sampling=True,
        cutoff=True,
    )
    common(
        sub.add_parser("sweep", help="predict across helix tangent angles"),
        sampling=True,
        cutoff=True,
    )
    return parser


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise ValidationError("cannot read input %s: %s" % (path, exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            "malformed JSON in %s at line %d column %d: %s"
            % (path, exc.lineno, exc.colno, exc.msg)
        ) from None


def _tolerance_overrides(pairs):
    overrides = {"holonomy_tol": DEFAULT_HOLONOMY_TOL, "agreement_factor": 1.0}
    mapping = {
        "holonomy_mod_2pi": "holonomy_tol",
        "method_agreement_factor": "agreement_factor",
    }
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise ValidationError("--tolerance expects KEY=VALUE, got %r" % pair)
        if key not in mapping:
            raise ValidationError(
                "unknown tolerance key %r (allowed: %s)" % (key, ", ".join(_TOLERANCE_KEYS))
            )
        try:
            overrides[mapping[key]] = float(value)
        except ValueError:
            raise ValidationError("tolerance %r is not a number" % value) from None
    return overrides


def _sampling_kwargs(args):
    tol = _tolerance_overrides(args.tolerance)
    if not args.closure_tol > 0:
        raise ValidationError("--closure-tol must be positive")
    return {
        "samples_per_turn": args.samples_per_turn,
        "closure_tol": args.closure_tol,
        "holonomy_tol": tol["holonomy_tol"],
        "agreement_factor": tol["agreement_factor"],
    }


def _override_chamber(spec_chamber, coefficient):
    if coefficient is None:
        return spec_chamber
    if spec_chamber is None:
        raise ValidationError("--cutoff-coefficient requires a chamber in the input")
    return replace(spec_chamber, cutoff_coefficient=coefficient)


def _cmd_phase(args):
    geometry, occ = schemas.parse_phase_input(_load_json(args.input))
    kw = _sampling_kwargs(args)
    path = _resolve_path(geometry, kw["samples_per_turn"])
    trace = tangent_trace(path, closure_tol=kw["closure_tol"])
    line, excess, transport = solid_angle_with_checks(
        trace, holonomy_tol=kw["holonomy_tol"], agreement_factor=kw["agreement_factor"]
    )
    phases = geometric_phases(occ, line)
    if args.format == "csv":
        return serialize.dumps_csv([serialize.phase_csv_row(line, excess, transport, phases)])
    return serialize.dumps_canonical(
        serialize.phase_command_doc(line, excess, transport, phases, occ)
    )


def _cmd_medium(args):
    medium = schemas.parse_medium(_load_json(args.input), where="input")
    if isinstance(medium, DispersiveMedium):
        rows = [
            (float(w), circular_indices(medium.at(float(w)))) for w in medium.omegas
        ]
        if args.format == "csv":
            return serialize.dumps_csv(
                [
                    serialize.indices_csv_row(idx, head={"omega_rad_per_s": w})
                    for w, idx in rows
                ]
            )
        return serialize.dumps_canonical(
            {
                "rows": [
                    {"omega_rad_per_s": w, **serialize.indices_doc(idx)} for w, idx in rows
                ]
            }
        )
    indices = circular_indices(medium)
    if args.format == "csv":
        return serialize.dumps_csv([serialize.indices_csv_row(indices)])
    return serialize.dumps_canonical(serialize.indices_doc(indices))


def _cmd_filter(args):
    medium, chamber, band = schemas.parse_filter_input(_load_json(args.input))
    chamber = _override_chamber(chamber, args.cutoff_coefficient)
    report = suppression_report(medium, chamber, band)
    doc = serialize.filter_csv_row(report, chamber.k_min)
    if args.format == "csv":
        return serialize.dumps_csv([doc])
    return serialize.dumps_canonical(doc)


def _cmd_predict(args):
    spec = schemas.parse_experiment(_load_json(args.input))
    chamber = _override_chamber(spec.chamber, args.cutoff_coefficient)
    if chamber is not spec.chamber:
        spec = replace(spec, chamber=chamber)
    pred = predict(spec, **_sampling_kwargs(args))
    if args.format == "csv":
        return serialize.dumps_csv([serialize.prediction_csv_row(pred)])
    return serialize.dumps_canonical(serialize.prediction_doc(pred, spec.occupation))


def _cmd_sweep(args):
    spec, thetas = schemas.parse_sweep_input(_load_json(args.input))
    chamber = _override_chamber(spec.chamber, args.cutoff_coefficient)
    if chamber is not spec.chamber:
        spec = replace(spec, chamber=chamber)
    rows = sweep_theta(spec, thetas, **_sampling_kwargs(args))
    if args.format == "csv":
        return serialize.dumps_csv(
            [
                serialize.prediction_csv_row(
                    row.prediction,
                    head={
                        "theta": row.theta,
                        "one_minus_cos_theta": row.one_minus_cos_theta,
                    },
                )
                for row in rows
            ]
        )
    return serialize.dumps_canonical(serialize.sweep_doc(rows, spec.occupation))


_COMMANDS = {
    "phase": _cmd_phase,
    "medium": _cmd_medium,
    "filter": _cmd_filter,
    "predict": _cmd_predict,
    "sweep": _cmd_sweep,
}


def _write_output(text, destination):
    if destination == "-":
        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        text = _COMMANDS[args.command](args)
        _write_output(text, args.output)
    except MethodDisagreementError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except VacphaseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
