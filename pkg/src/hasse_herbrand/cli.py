"""Command-line front end.

Subcommands::

    hasse-herbrand hh SPEC {eval,breaks,invert,table} [--points R ...] [--range A B STEP]
    hasse-herbrand depth SPEC --depths R [R ...] [--induced]
    hasse-herbrand cyclo --p P --n N
    hasse-herbrand verify [{all,pwl,ramification,cyclotomic,depth}] [--cases N] [--fixture F]

Global flags: ``--format json|csv``, ``--output PATH``, ``--seed INT``.
Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import codec
from .cyclotomic import CyclotomicParams, cyclotomic_filtration, cyclotomic_table
from .depth import depth_report, induced_torus_depth, inflation_locus
from .pwl import evaluate, invert
from .rational import ParseError, format_rational, parse_rational
from .ramification import (
    Filtration,
    ramification_index,
    resolve_phi,
    upper_breaks,
    upper_jumps,
)
from .verify import SCOPES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return codec.load_json(text)


def _rationals(values: Optional[Sequence[str]]) -> List[Fraction]:
    return [parse_rational(v) for v in values or ()]


def _fmt(values) -> List[str]:
    return [format_rational(v) for v in values]


def _pwl_rows(d: Dict[str, Any]) -> List[List[str]]:
    rows = [["kind", "x", "y"]]
    rows += [["vertex", x, y] for x, y in d["vertices"]]
    rows.append(["final_slope", "", d["final_slope"]])
    return rows


def cmd_hh(args) -> Dict[str, Any]:
    spec = codec.spec_from_dict(_read_json(args.spec))
    phi = resolve_phi(spec)
    inputs: Dict[str, Any] = {"spec": codec.spec_to_dict(spec), "action": args.action}
    if args.action == "eval":
        points = _rationals(args.points)
        if not points:
            raise UsageError("eval needs --points")
        values = [evaluate(phi, x) for x in points]
        inputs["points"] = _fmt(points)
        results = {"points": _fmt(points), "values": _fmt(values)}
        rows = [["x", "phi"]] + [list(r) for r in zip(results["points"], results["values"])]
    elif args.action == "breaks":
        results = codec.pwl_to_dict(phi)
        results["ramification_index"] = ramification_index(spec)
        if isinstance(spec, Filtration):
            results["upper_breaks"] = [[format_rational(v), o] for v, o in upper_breaks(spec.filtration)]
        rows = _pwl_rows(results)
    elif args.action == "invert":
        results = codec.pwl_to_dict(invert(phi))
        rows = _pwl_rows(results)
    else:
        if args.range is None:
            raise UsageError("table needs --range START STOP STEP")
        start, stop, step = _rationals(args.range)
        if step <= 0 or start < 0 or stop < start:
            raise UsageError("range needs 0 <= START <= STOP and STEP > 0")
        psi = invert(phi)
        xs, x = [], start
        while x <= stop:
            xs.append(x)
            x += step
        inputs["range"] = _fmt((start, stop, step))
        table = [[format_rational(x), format_rational(evaluate(phi, x)), format_rational(evaluate(psi, x))]
                 for x in xs]
        results = {"columns": ["x", "phi", "psi"], "rows": table}
        rows = [results["columns"]] + table
    return {"command": "hh", "inputs": inputs, "results": results, "_rows": rows}


def cmd_depth(args) -> Dict[str, Any]:
    depths = _rationals(args.depths)
    if not depths:
        raise UsageError("depth needs --depths")
    raw = _read_json(args.spec)
    header = ["character_depth", "parameter_depth", "preserved", "gap"]
    if args.induced:
        torus = codec.induced_from_dict(raw)
        report = codec.report_to_dict(induced_torus_depth(torus, depths))
        inputs = {"torus": codec.induced_to_dict(torus), "depths": _fmt(depths)}
        results: Dict[str, Any] = {"reports": [report]}
    else:
        spec = codec.spec_from_dict(raw)
        reports = [codec.report_to_dict(depth_report(spec, r)) for r in depths]
        inputs = {"spec": codec.spec_to_dict(spec), "depths": _fmt(depths)}
        results = {
            "reports": reports,
            "inflation_locus": codec.intervals_to_list(inflation_locus(spec)),
        }
    rows = [header] + [
        [r[k] if k != "preserved" else str(r[k]).lower() for k in header] for r in results["reports"]
    ]
    return {"command": "depth", "inputs": inputs, "results": results, "_rows": rows}


def cmd_cyclo(args) -> Dict[str, Any]:
    params = CyclotomicParams(args.p, args.n)
    filt = cyclotomic_filtration(params)
    table = cyclotomic_table(params)
    phi_K = table["phi_L_K"]
    sample = sorted({Fraction(params.p ** k - 1) for k in range(params.n + 1)} | {Fraction(1)})
    results: Dict[str, Any] = {
        "degree": table["degree"],
        "jumps": table["jumps"],
        "upper_jumps": _fmt(upper_jumps(filt)),
        "phi_L_K": codec.pwl_to_dict(phi_K),
        "samples": {"r": _fmt(sample), "phi_L_K": _fmt(evaluate(phi_K, r) for r in sample)},
    }
    if "phi_L_F" in table:
        results["phi_L_F"] = codec.pwl_to_dict(table["phi_L_F"])
        results["samples"]["phi_L_F"] = _fmt(evaluate(table["phi_L_F"], r) for r in sample)
    rows = [["u", "order", "phi_L_K(u)"]] + [
        [str(u), str(o), format_rational(v)]
        for (u, o), (v, _) in zip(filt.jumps, upper_breaks(filt))
    ]
    return {"command": "cyclo", "inputs": {"p": args.p, "n": args.n}, "results": results, "_rows": rows}


def cmd_verify(args) -> Dict[str, Any]:
    fixture = _read_json(args.fixture) if args.fixture else None
    if fixture is not None and not isinstance(fixture, list):
        raise ParseError("fixture must be a JSON list of claims")
    results = run_verify(args.scope, args.seed, args.cases, fixture)
    summary = [r.as_dict() for r in results]
    rows = [["property", "cases", "passed"]] + [
        [r.name, str(r.cases), str(r.passed).lower()] for r in results
    ]
    return {
        "command": "verify",
        "inputs": {"scope": args.scope, "seed": args.seed, "cases": args.cases, "fixture": args.fixture},
        "results": {"passed": all(r.passed for r in results), "properties": summary},
        "_rows": rows,
        "_exit": EXIT_OK if all(r.passed for r in results) else EXIT_FAIL,
    }


def build_parser() -> argparse.ArgumentParser:
    def add_globals(p: argparse.ArgumentParser, default) -> None:
        p.add_argument("--format", choices=("json", "csv"), default=default("json"))
        p.add_argument("--output", default=default(None), help="write here instead of stdout")
        p.add_argument("--seed", type=int, default=default(0))

    parser = argparse.ArgumentParser(
        prog="hasse-herbrand",
        description="Exact Hasse-Herbrand functions and depth transport for tori.",
    )
    add_globals(parser, lambda v: v)
    sub = parser.add_subparsers(dest="command", required=True)
    suppress = lambda v: argparse.SUPPRESS  # noqa: E731

    hh = sub.add_parser("hh", help="evaluate / tabulate / invert phi of an extension")
    add_globals(hh, suppress)
    hh.add_argument("spec", help="extension spec JSON file")
    hh.add_argument("action", choices=("eval", "breaks", "invert", "table"))
    hh.add_argument("--points", nargs="+", metavar="R")
    hh.add_argument("--range", nargs=3, metavar=("START", "STOP", "STEP"))
    hh.set_defaults(func=cmd_hh)

    dp = sub.add_parser("depth", help="character depth -> parameter depth reports")
    add_globals(dp, suppress)
    dp.add_argument("spec", help="extension spec JSON file (induced torus JSON with --induced)")
    dp.add_argument("--depths", nargs="+", metavar="R")
    dp.add_argument("--induced", action="store_true", help="one depth per factor, sup rule")
    dp.set_defaults(func=cmd_depth)

    cy = sub.add_parser("cyclo", help="ramification table of Q_p(zeta_{p^n})")
    add_globals(cy, suppress)
    cy.add_argument("--p", type=int, required=True)
    cy.add_argument("--n", type=int, required=True)
    cy.set_defaults(func=cmd_cyclo)

    vf = sub.add_parser("verify", help="run the seeded property suites")
    add_globals(vf, suppress)
    vf.add_argument("scope", nargs="?", default="all", choices=("all",) + SCOPES)
    vf.add_argument("--cases", type=int, default=1000)
    vf.add_argument("--fixture", help="JSON list of recorded claims to check")
    vf.set_defaults(func=cmd_verify)
    return parser


def render(record: Dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(record["_rows"])
        return buf.getvalue()
    public = {k: v for k, v in record.items() if not k.startswith("_")}
    return json.dumps(public, indent=2, sort_keys=True) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        record = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = render(record, args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return record.get("_exit", EXIT_OK)


if __name__ == "__main__":
    raise SystemExit(main())
