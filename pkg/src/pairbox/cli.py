"""Command-line front end.

Thin client over the service handlers: each subcommand builds the same
request model the HTTP endpoint accepts, runs the same handler in
process, and writes the result as CSV or JSON to stdout or a file.
Floating-point values in CSV are printed with 17 significant digits so
they parse back bit-exactly; identical invocations produce byte-identical
documents.

Exit codes: 0 success, 2 invalid arguments or parameters, 3 numerical
failure (non-convergence), 4 output write failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import pydantic

from .errors import InputError, NumericsError
from .service import handlers, schemas

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICS = 3
EXIT_IO = 4

# Per-subcommand CSV schema: (request model, handler, column order, row kind).
# Row kind "table" payloads are lists of dicts; "record" payloads are one
# dict emitted as a single CSV row.
_SUBCOMMANDS = {
    "two-mode-spectrum": (
        schemas.TwoModeSpectrumRequest,
        handlers.run_two_mode_spectrum,
        ("level", "energy", "mean_n1", "var_n1", "coherence"),
        "table",
    ),
    "effective-spectrum": (
        schemas.EffectiveSpectrumRequest,
        handlers.run_effective_spectrum,
        ("level", "energy"),
        "table",
    ),
    "sweep-ng": (schemas.SweepNgRequest, handlers.run_sweep_ng, None, "table"),
    "overlap": (
        schemas.OverlapRequest,
        handlers.run_overlap,
        ("exact", "asymptotic", "log_exact", "linearized"),
        "record",
    ),
    "cone-scan": (
        schemas.ConeScanRequest,
        handlers.run_cone_scan,
        ("delta_n", "overlap_exact", "overlap_asymptotic"),
        "cone",
    ),
    "compare": (
        schemas.CompareRequest,
        handlers.run_compare,
        ("level", "gap_two_mode", "gap_effective", "rel_discrepancy"),
        "table",
    ),
    "pipeline": (
        schemas.PipelineRequest,
        handlers.run_pipeline,
        (
            "effective_overlap",
            "delta_n",
            "condensate_overlap_exact",
            "condensate_overlap_asymptotic",
        ),
        "record",
    ),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _csv_lines(columns, rows) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _to_csv(name: str, payload) -> str:
    _, _, columns, kind = _SUBCOMMANDS[name]
    if kind == "record":
        return _csv_lines(columns, [payload])
    if kind == "cone":
        return _csv_lines(columns, payload["rows"])
    if columns is None:  # sweep-ng: columns depend on the level count
        columns = tuple(payload[0].keys())
    return _csv_lines(columns, payload)


def _emit(document: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(document)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(document)


def _add_output_flags(sub) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", default="-", metavar="PATH", help="file or - for stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="pairbox", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("two-mode-spectrum", help="lowest levels of the two-mode sector matrix")
    sub.add_argument("--ec", type=float, required=True)
    sub.add_argument("--u", type=float, required=True)
    sub.add_argument("--lambda", dest="lam", type=float, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--nbar1", type=float, required=True)
    sub.add_argument("--levels", type=int, default=2)
    _add_output_flags(sub)

    sub = subs.add_parser("effective-spectrum", help="lowest levels of the effective charge-basis model")
    sub.add_argument("--ec", type=float, required=True)
    sub.add_argument("--ej", type=float, required=True)
    sub.add_argument("--ng", type=float, required=True)
    sub.add_argument("--n-max", dest="n_max", type=int, default=None)
    sub.add_argument("--levels", type=int, default=2)
    _add_output_flags(sub)

    sub = subs.add_parser("sweep-ng", help="effective spectrum across a gate-charge grid")
    sub.add_argument("--ec", type=float, required=True)
    sub.add_argument("--ej", type=float, required=True)
    sub.add_argument("--n-max", dest="n_max", type=int, default=None)
    sub.add_argument("--ng-start", type=float, required=True)
    sub.add_argument("--ng-stop", type=float, required=True)
    sub.add_argument("--ng-steps", type=int, required=True)
    sub.add_argument("--levels", type=int, default=2)
    _add_output_flags(sub)

    sub = subs.add_parser("overlap", help="condensate overlap for one (N, N1, dN)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--n1", type=float, required=True)
    sub.add_argument("--delta-n", dest="delta_n", type=float, required=True)
    _add_output_flags(sub)

    sub = subs.add_parser("cone-scan", help="overlap across a grid of charge separations")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--n1", type=float, required=True)
    sub.add_argument("--delta-start", type=float, required=True)
    sub.add_argument("--delta-stop", type=float, required=True)
    sub.add_argument("--delta-steps", type=int, required=True)
    sub.add_argument(
        "--thresholds",
        default="",
        help="comma-separated overlap thresholds in (0,1)",
    )
    _add_output_flags(sub)

    sub = subs.add_parser("compare", help="gap table: two-mode model vs mapped effective model")
    sub.add_argument("--ec", type=float, required=True)
    sub.add_argument("--u", type=float, required=True)
    sub.add_argument("--lambda", dest="lam", type=float, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--nbar1", type=float, required=True)
    sub.add_argument("--levels", type=int, default=3)
    _add_output_flags(sub)

    sub = subs.add_parser("pipeline", help="full contrast report for one parameter set")
    sub.add_argument("--ec", type=float, required=True)
    sub.add_argument("--u", type=float, required=True)
    sub.add_argument("--lambda", dest="lam", type=float, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--nbar1", type=float, required=True)
    sub.add_argument("--n1", type=float, required=True)
    sub.add_argument("--levels", type=int, default=3)
    _add_output_flags(sub)

    return parser


def _request_payload(args: argparse.Namespace) -> dict:
    skip = {"subcommand", "format", "output"}
    payload = {k: v for k, v in vars(args).items() if k not in skip and v is not None}
    if args.subcommand == "cone-scan":
        raw = payload.pop("thresholds", "")
        payload["thresholds"] = [float(t) for t in raw.split(",") if t.strip()]
    return payload


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    name = args.subcommand
    request_model, handler, _, _ = _SUBCOMMANDS[name]

    try:
        request = request_model(**_request_payload(args))
        payload = handler(request)
    except (pydantic.ValidationError, InputError, ValueError) as exc:
        first = str(exc).splitlines()[0]
        print(f"error: {first}", file=sys.stderr)
        return EXIT_USAGE
    except NumericsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICS

    if args.format == "json":
        document = json.dumps(payload, indent=2) + "\n"
    else:
        document = _to_csv(name, payload)

    try:
        _emit(document, args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def entry() -> None:
    raise SystemExit(main())
