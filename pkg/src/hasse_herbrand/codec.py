"""JSON encodings for functions, extension specs and depth reports.

All rationals are written as strings (``"7/3"``, ``"5"``).
"""
from __future__ import annotations

import json
from typing import Any, Dict, List

from .depth import DepthReport, InducedTorusSpec, Interval
from .pwl import PwlFunction
from .rational import ParseError, format_rational, parse_rational
from .ramification import (
    BASE_QP,
    Cyclotomic,
    ExtensionSpec,
    Filtration,
    RamificationFiltration,
    Tame,
    Tower,
    Unramified,
)


def pwl_to_dict(f: PwlFunction) -> Dict[str, Any]:
    return {
        "vertices": [[format_rational(x), format_rational(y)] for x, y in f.vertices],
        "final_slope": format_rational(f.final_slope),
    }


def pwl_from_dict(d: Any) -> PwlFunction:
    try:
        verts = tuple(
            (parse_rational(x), parse_rational(y)) for x, y in d["vertices"]
        )
        slope = parse_rational(d["final_slope"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed PWL function: {exc}") from exc
    # invariant violations are also input errors at this boundary
    try:
        return PwlFunction(verts, slope)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def spec_to_dict(spec: ExtensionSpec) -> Dict[str, Any]:
    if isinstance(spec, Filtration):
        return {"kind": "filtration", "jumps": [list(j) for j in spec.filtration.jumps]}
    if isinstance(spec, Tame):
        return {"kind": "tame", "e": spec.e}
    if isinstance(spec, Unramified):
        return {"kind": "unramified"}
    if isinstance(spec, Cyclotomic):
        return {"kind": "cyclotomic", "p": spec.p, "n": spec.n, "base": spec.base}
    if isinstance(spec, Tower):
        return {"kind": "tower", "steps": [spec_to_dict(s) for s in spec.steps]}
    raise TypeError(f"not an extension spec: {spec!r}")


def _int(d: Dict[str, Any], key: str) -> int:
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{key!r} must be an integer, got {v!r}")
    return v


def spec_from_dict(d: Any) -> ExtensionSpec:
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError(f"extension spec must be an object with a 'kind': {d!r}")
    kind = d["kind"]
    try:
        if kind == "filtration":
            jumps = d["jumps"]
            pairs = []
            for j in jumps:
                if not isinstance(j, list) or len(j) != 2:
                    raise ParseError(f"jump must be a pair [u, order]: {j!r}")
                for v in j:
                    if isinstance(v, bool) or not isinstance(v, int):
                        raise ParseError(f"jump entries must be integers: {j!r}")
                pairs.append(tuple(j))
            return Filtration(RamificationFiltration(tuple(pairs)))
        if kind == "tame":
            return Tame(_int(d, "e"))
        if kind == "unramified":
            return Unramified()
        if kind == "cyclotomic":
            return Cyclotomic(_int(d, "p"), _int(d, "n"), d.get("base", BASE_QP))
        if kind == "tower":
            steps = d["steps"]
            if not isinstance(steps, list):
                raise ParseError("'steps' must be a list")
            return Tower(tuple(spec_from_dict(s) for s in steps))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid {kind!r} spec: {exc}") from exc
    raise ParseError(f"unknown spec kind {kind!r}")


def induced_to_dict(torus: InducedTorusSpec) -> Dict[str, Any]:
    return {
        "kind": "induced",
        "factors": [{"label": label, "spec": spec_to_dict(s)} for s, label in torus.factors],
    }


def induced_from_dict(d: Any) -> InducedTorusSpec:
    try:
        factors = tuple(
            (spec_from_dict(f["spec"]), f.get("label", f"T{i + 1}"))
            for i, f in enumerate(d["factors"])
        )
        return InducedTorusSpec(factors)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid induced torus spec: {exc}") from exc


def report_to_dict(report: DepthReport) -> Dict[str, Any]:
    return {
        "character_depth": format_rational(report.character_depth),
        "parameter_depth": format_rational(report.parameter_depth),
        "preserved": report.preserved,
        "gap": format_rational(report.gap),
    }


def report_from_dict(d: Dict[str, Any]) -> DepthReport:
    report = DepthReport(parse_rational(d["character_depth"]), parse_rational(d["parameter_depth"]))
    if "gap" in d and parse_rational(d["gap"]) != report.gap:
        raise ParseError("gap does not match the depths")
    return report


def intervals_to_list(intervals: List[Interval]) -> List[List[str]]:
    return [
        [format_rational(a), "inf" if b is None else format_rational(b)]
        for a, b in intervals
    ]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def load_spec_text(text: str) -> ExtensionSpec:
    return spec_from_dict(load_json(text))
