"""Command-line interface.

Five subcommands: ``mean`` (evaluate one mean), ``bounds-table`` (the
seven inequalities with their sharp constants), ``certify`` (sample-based
certification), ``series`` (exact series coefficients), and ``hfun``
(kernel evaluation).  Exit codes: 0 success, 1 certification violations,
2 usage or domain errors.  Output is deterministic: rerunning a command
with the same arguments is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .bounds import SPECS, certify, sharp_bounds
from .errors import MeanBoundError
from .kernels import (
    HFunctionId,
    csc_coefficients,
    cot_coefficients,
    csc_sq_coefficients,
    default_table,
    h1_coefficients,
    h3_coefficients,
    h_eval,
)
from .means import MeanKind, PositivePair, eval_mean

__all__ = ["main"]

SCHEMA_VERSION = 1

_KIND_BY_CODE = {kind.value: kind for kind in MeanKind}
_SERIES_FNS = {
    "csc": csc_coefficients,
    "cot": cot_coefficients,
    "cscsq": csc_sq_coefficients,
    "h1": h1_coefficients,
    "h3": h3_coefficients,
}
_SERIES_MAX_ORDER = 16


def _record(command: str, inputs: dict[str, Any], results: list[dict[str, Any]]) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "precision": {"float": "binary64", "digits": 17},
        "results": results,
    }


def _cell(value: Any) -> str:
    # repr of a float is its shortest round-trip form, identical to the
    # JSON rendering, so CSV and JSON payloads match byte for byte.
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def _emit_structured(record: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        results = record["results"]
        columns = list(results[0].keys()) if results else []
        lines = [",".join(columns)]
        lines.extend(",".join(_cell(row[col]) for col in columns) for row in results)
        print("\n".join(lines))
    else:
        raise AssertionError(f"unhandled format {fmt!r}")


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_mean(args: argparse.Namespace) -> int:
    kind = _KIND_BY_CODE[args.kind]
    value = eval_mean(kind, PositivePair(args.a, args.b))
    if args.format == "text":
        print(repr(value))
        return 0
    record = _record(
        "mean",
        {"kind": args.kind, "a": args.a, "b": args.b},
        [{"kind": args.kind, "a": args.a, "b": args.b, "value": value}],
    )
    _emit_structured(record, args.format)
    return 0


def _cmd_hfun(args: argparse.Namespace) -> int:
    value = h_eval(HFunctionId(args.id), args.x)
    if args.format == "text":
        print(repr(value))
        return 0
    record = _record(
        "hfun",
        {"id": args.id, "x": args.x},
        [{"id": args.id, "x": args.x, "value": value}],
    )
    _emit_structured(record, args.format)
    return 0


def _bounds_rows() -> list[dict[str, Any]]:
    rows = []
    for spec in SPECS.values():
        sb = sharp_bounds(spec)
        rows.append(
            {
                "id": spec.id,
                "target": spec.target.value,
                "hi": spec.hi.value,
                "lo": spec.lo.value,
                "alpha_exact": sb.alpha_exact,
                "alpha": sb.alpha,
                "beta_exact": sb.beta_exact,
                "beta": sb.beta,
                "kernel": spec.kernel.value,
            }
        )
    return rows


def _cmd_bounds_table(args: argparse.Namespace) -> int:
    rows = _bounds_rows()
    if args.format == "text":
        header = f"{'id':<9}{'target':<8}{'hi':<6}{'lo':<6}{'alpha':<54}{'beta':<28}{'kernel'}"
        print(header)
        for r in rows:
            alpha = f"{r['alpha_exact']} = {r['alpha']!r}"
            beta = f"{r['beta_exact']} = {r['beta']!r}"
            print(f"{r['id']:<9}{r['target']:<8}{r['hi']:<6}{r['lo']:<6}{alpha:<54}{beta:<28}{r['kernel']}")
        return 0
    _emit_structured(_record("bounds-table", {}, rows), args.format)
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    ids = list(SPECS) if args.id == "all" else [args.id]
    rows = []
    for spec_id in ids:
        report = certify(SPECS[spec_id], args.samples, args.seed, args.tol)
        rows.append(
            {
                "id": report.id,
                "samples": report.samples,
                "violations": report.violations,
                "worst_margin": report.worst_margin,
                "worst_x": report.worst_x,
                "alpha_probe_gap": report.alpha_probe_gap,
                "beta_probe_gap": report.beta_probe_gap,
                "seed": report.seed,
                "tolerance": report.tolerance,
            }
        )
    exit_code = 0 if all(r["violations"] == 0 for r in rows) else 1
    if args.format == "text":
        for r in rows:
            status = "ok" if r["violations"] == 0 else "VIOLATED"
            print(
                f"{r['id']:<9}{status:<10}samples={r['samples']}  violations={r['violations']}  "
                f"worst_margin={r['worst_margin']!r}"
            )
        return exit_code
    inputs = {"id": args.id, "samples": args.samples, "seed": args.seed, "tol": args.tol}
    _emit_structured(_record("certify", inputs, rows), args.format)
    return exit_code


def _cmd_series(args: argparse.Namespace) -> int:
    table = default_table()
    coefficients = _SERIES_FNS[args.fn](args.order, table)
    rows = [
        {"n": n, "power": power, "exact": _fraction_str(coeff), "value": float(coeff)}
        for n, (power, coeff) in enumerate(coefficients, start=1)
    ]
    if args.format == "text":
        for r in rows:
            print(f"x^{r['power']:<4}{r['exact']:<24}{r['value']!r}")
        return 0
    inputs = {"fn": args.fn, "order": args.order}
    _emit_structured(_record("series", inputs, rows), args.format)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_format(parser: argparse.ArgumentParser, choices=("text", "csv", "json")) -> None:
    parser.add_argument("--format", choices=choices, default="text", help="output format")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meanbound",
        description="Bivariate means, trigonometric kernels, and certified sharp bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mean = sub.add_parser("mean", help="evaluate one mean of a positive pair")
    p_mean.add_argument("--kind", required=True, choices=sorted(_KIND_BY_CODE),
                        help="mean to evaluate")
    p_mean.add_argument("--a", required=True, type=float)
    p_mean.add_argument("--b", required=True, type=float)
    _add_format(p_mean)
    p_mean.set_defaults(handler=_cmd_mean)

    p_table = sub.add_parser("bounds-table", help="the seven inequalities and their sharp constants")
    _add_format(p_table)
    p_table.set_defaults(handler=_cmd_bounds_table)

    p_certify = sub.add_parser("certify", help="sample-based certification of the inequalities")
    p_certify.add_argument("--id", required=True, choices=["all", *SPECS],
                           help="inequality to certify, or 'all'")
    p_certify.add_argument("--samples", type=int, default=100_000)
    p_certify.add_argument("--seed", type=int, default=42)
    p_certify.add_argument("--tol", type=float, default=1e-12,
                           help="relative margin slack before a sample counts as a violation")
    _add_format(p_certify)
    p_certify.set_defaults(handler=_cmd_certify)

    p_series = sub.add_parser("series", help="exact series coefficients")
    p_series.add_argument("--fn", required=True, choices=sorted(_SERIES_FNS))
    p_series.add_argument("--order", required=True, type=int,
                          help=f"number of coefficients, 1..{_SERIES_MAX_ORDER}")
    _add_format(p_series)
    p_series.set_defaults(handler=_cmd_series)

    p_hfun = sub.add_parser("hfun", help="evaluate one kernel function")
    p_hfun.add_argument("--id", required=True, choices=[f.value for f in HFunctionId])
    p_hfun.add_argument("--x", required=True, type=float)
    _add_format(p_hfun)
    p_hfun.set_defaults(handler=_cmd_hfun)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "series" and not 1 <= args.order <= _SERIES_MAX_ORDER:
        print(f"error: --order must be in [1, {_SERIES_MAX_ORDER}], got {args.order}", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except MeanBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
