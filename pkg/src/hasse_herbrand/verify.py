"""Seeded property suites behind the ``verify`` subcommand.

Each suite returns a list of :class:`PropertyResult`; a failing property
carries its first counterexample as a JSON-ready dict.  Generation uses a
single ``random.Random(seed)`` per suite so output is deterministic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional

from . import codec
from .cyclotomic import (
    CyclotomicParams,
    cyclotomic_filtration,
    phi_cyclotomic_over_F_closed_form,
    phi_cyclotomic_over_F_derived,
    phi_cyclotomic_over_K,
)
from .depth import (
    InducedTorusSpec,
    character_depth_from_parameter,
    depth_shapiro,
    inflation_locus,
    induced_torus_depth,
    parameter_depth,
)
from .pwl import INFINITE, PwlFunction, compose, evaluate, identity, invert, pwl_from_segments
from .rational import format_rational, parse_rational
from .ramification import (
    BASE_QP,
    BASE_QP_ZETA,
    Cyclotomic,
    ExtensionSpec,
    Filtration,
    RamificationFiltration,
    Tame,
    Tower,
    Unramified,
    phi_from_filtration,
    psi_from_filtration,
    ramification_index,
    resolve_phi,
    resolve_psi,
    transport_upper_index,
    upper_breaks,
)

SCOPES = ("pwl", "ramification", "cyclotomic", "depth")
PRIMES = (2, 3, 5, 7)
EXPONENTS = (2, 3, 4)

Check = Callable[[], Optional[Dict[str, Any]]]


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def as_dict(self) -> Dict[str, Any]:
        return {
            "property": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


def run_property(name: str, checks: Iterable[Check]) -> PropertyResult:
    """Run checks until the first failure."""
    result = PropertyResult(name)
    for check in checks:
        result.cases += 1
        failure = check()
        if failure is not None:
            result.counterexample = failure
            break
    return result


# random generators -----------------------------------------------------------


def random_rational(rng: random.Random, hi: int = 60, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(0, hi * max_den), rng.randint(1, max_den))


def random_filtration(rng: random.Random, max_drops: int = 4) -> RamificationFiltration:
    drops = rng.randint(0, max_drops)
    orders = [1]
    for _ in range(drops):
        orders.append(orders[-1] * rng.choice((2, 2, 3, 4, 5, 7)))
    orders.reverse()
    positions = [0]
    for _ in range(drops):
        positions.append(positions[-1] + rng.randint(1, 9))
    if drops == 0:
        return RamificationFiltration(((0, 1),))
    return RamificationFiltration(tuple(zip(positions, orders)))


def random_pwl(rng: random.Random, start_zero: bool = True) -> PwlFunction:
    start = Fraction(0) if start_zero else random_rational(rng, hi=10)
    segs = [
        (Fraction(rng.randint(1, 30), rng.randint(1, 6)), Fraction(rng.randint(1, 20), rng.randint(1, 20)))
        for _ in range(rng.randint(0, 5))
    ]
    segs.append((INFINITE, Fraction(rng.randint(1, 20), rng.randint(1, 20))))
    return pwl_from_segments(start, segs)


def random_spec(rng: random.Random, depth: int = 2) -> ExtensionSpec:
    kinds = ["filtration", "filtration", "tame", "unramified", "cyclotomic"]
    if depth > 0:
        kinds.append("tower")
    kind = rng.choice(kinds)
    if kind == "filtration":
        return Filtration(random_filtration(rng))
    if kind == "tame":
        return Tame(rng.randint(1, 12))
    if kind == "unramified":
        return Unramified()
    if kind == "cyclotomic":
        return Cyclotomic(rng.choice(PRIMES), rng.randint(1, 3), rng.choice((BASE_QP, BASE_QP_ZETA)))
    return Tower(tuple(random_spec(rng, depth - 1) for _ in range(rng.randint(1, 3))))


def _enc(**kw: Any) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for k, v in kw.items():
        if isinstance(v, PwlFunction):
            out[k] = codec.pwl_to_dict(v)
        elif isinstance(v, RamificationFiltration):
            out[k] = [list(j) for j in v.jumps]
        elif isinstance(v, (Filtration, Tame, Unramified, Cyclotomic, Tower)):
            out[k] = codec.spec_to_dict(v)
        elif isinstance(v, Fraction):
            out[k] = format_rational(v)
        elif isinstance(v, (list, tuple)):
            out[k] = [format_rational(x) if isinstance(x, Fraction) else x for x in v]
        else:
            out[k] = v
    return out


def naive_evaluate(f: PwlFunction, x: Fraction) -> Fraction:
    """Walk the pieces from 0, accumulating ``slope * overlap``."""
    y = f.vertices[0][1]
    for (x0, _), (x1, _), s in zip(f.vertices, f.vertices[1:], f.slopes):
        if x <= x0:
            break
        y += s * (min(x, x1) - x0)
    last = f.vertices[-1][0]
    if x > last:
        y += f.final_slope * (x - last)
    return y


def summation_phi(filt: RamificationFiltration, r: Fraction) -> Fraction:
    """``sum_{i=1}^{floor r} |G_i|/|G_0| + (r - floor r) |G_ceil r| / |G_0|``."""
    g0 = filt.jumps[0][1]

    def order(i: int) -> int:
        return [o for u, o in filt.jumps if u <= i][-1]

    fl = r.numerator // r.denominator
    total = sum(Fraction(order(i), g0) for i in range(1, fl + 1))
    if r != fl:
        total += (r - fl) * Fraction(order(fl + 1), g0)
    return total


# suites ----------------------------------------------------------------------


def suite_pwl(seed: int, cases: int) -> List[PropertyResult]:
    rng = random.Random(seed)
    fs = [random_pwl(rng) for _ in range(cases)]
    gs = [random_pwl(rng, start_zero=rng.random() < 0.5) for _ in range(cases)]
    hs = [random_pwl(rng) for _ in range(cases)]
    xs = [random_rational(rng) for _ in range(cases)]
    ident = identity()

    def canon(f: PwlFunction) -> Check:
        return lambda: None if PwlFunction(f.vertices, f.final_slope) == f else _enc(f=f)

    def naive(f: PwlFunction, x: Fraction) -> Check:
        return lambda: None if evaluate(f, x) == naive_evaluate(f, x) else _enc(f=f, x=x)

    def comp(f: PwlFunction, g: PwlFunction, x: Fraction) -> Check:
        return lambda: (
            None if evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x)) else _enc(f=f, g=g, x=x)
        )

    def inv(f: PwlFunction) -> Check:
        def check():
            fi = invert(f)
            ok = compose(f, fi) == ident and compose(fi, f) == ident and invert(fi) == f
            return None if ok else _enc(f=f)
        return check

    def assoc(f, g, h) -> Check:
        return lambda: (
            None if compose(f, compose(g, h)) == compose(compose(f, g), h) else _enc(f=f, g=g, h=h)
        )

    return [
        run_property("canonicalization idempotent", (canon(f) for f in fs)),
        run_property("evaluate matches segment walk", (naive(f, x) for f, x in zip(gs, xs))),
        run_property("compose evaluates pointwise", (comp(f, g, x) for f, g, x in zip(fs, gs, xs))),
        run_property("inverse round trips", (inv(f) for f in fs)),
        run_property("compose associative", (assoc(f, g, h) for f, g, h in zip(fs, gs, hs))),
    ]


def suite_ramification(seed: int, cases: int) -> List[PropertyResult]:
    rng = random.Random(seed)
    filts = [random_filtration(rng) for _ in range(cases)]
    ident = identity()

    def round_trip(filt) -> Check:
        def check():
            phi, psi = phi_from_filtration(filt), psi_from_filtration(filt)
            return None if compose(psi, phi) == ident and compose(phi, psi) == ident else _enc(filtration=filt)
        return check

    def shape(filt) -> Check:
        def check():
            phi = phi_from_filtration(filt)
            ok = phi(0) == 0 and all(s > 0 for s in phi.slopes) and phi.is_concave()
            return None if ok else _enc(filtration=filt, phi=phi)
        return check

    def oracle(filt, points) -> Check:
        def check():
            phi = phi_from_filtration(filt)
            for r in points:
                if evaluate(phi, r) != summation_phi(filt, r):
                    return _enc(filtration=filt, r=r)
            return None
        return check

    def herbrand(filt) -> Check:
        def check():
            psi = psi_from_filtration(filt)
            lowered = [(evaluate(psi, v), o) for v, o in upper_breaks(filt)]
            return None if lowered == [(Fraction(u), o) for u, o in filt.jumps] else _enc(filtration=filt)
        return check

    def tower(steps, points) -> Check:
        def check():
            t = Tower(tuple(Filtration(f) for f in steps))
            phi = resolve_phi(t)
            phis = [phi_from_filtration(f) for f in steps]
            for x in points:
                y = x
                for p in reversed(phis):
                    y = evaluate(p, y)
                if evaluate(phi, x) != y:
                    return _enc(steps=[codec.spec_to_dict(Filtration(f)) for f in steps], x=x)
            # other bracketing of the same composition
            alt = phis[0]
            for p in phis[1:]:
                alt = compose(alt, p)
            if alt != phi or ramification_index(t) != _prod(f.ramification_index for f in steps):
                return _enc(steps=[codec.spec_to_dict(Filtration(f)) for f in steps])
            return None
        return check

    def transport(spec, a, b) -> Check:
        lo, hi = min(a, b), max(a, b)

        def check():
            tl, th = transport_upper_index(lo, spec), transport_upper_index(hi, spec)
            ok = (tl < th) if lo < hi else (tl == th)
            ok = ok and depth_shapiro(spec, th) == hi
            return None if ok else _enc(spec=spec, lo=lo, hi=hi)
        return check

    n_towers = max(1, min(cases, 200))
    towers = [[random_filtration(rng) for _ in range(rng.choice((2, 3)))] for _ in range(n_towers)]
    tower_pts = [[random_rational(rng) for _ in range(5)] for _ in towers]
    pts = [[random_rational(rng) for _ in range(10)] for _ in filts]
    specs = [random_spec(rng) for _ in range(cases)]
    pairs = [(random_rational(rng), random_rational(rng)) for _ in specs]
    return [
        run_property("psi o phi and phi o psi are the identity", (round_trip(f) for f in filts)),
        run_property("phi strictly increasing and concave", (shape(f) for f in filts)),
        run_property("phi matches unit-interval summation", (oracle(f, p) for f, p in zip(filts, pts))),
        run_property("upper breaks lower back to jumps", (herbrand(f) for f in filts)),
        run_property("tower transitivity", (tower(s, p) for s, p in zip(towers, tower_pts))),
        run_property("upper-index transport monotone, inverted by phi",
                     (transport(s, a, b) for s, (a, b) in zip(specs, pairs))),
    ]


def _prod(it: Iterable[int]) -> int:
    out = 1
    for v in it:
        out *= v
    return out


def suite_cyclotomic(seed: int, cases: int) -> List[PropertyResult]:
    rng = random.Random(seed)
    grid = [CyclotomicParams(p, n) for p in PRIMES for n in EXPONENTS]
    per_case = max(1, min(cases, 50))

    def closed_vs_derived(params) -> Check:
        def check():
            a, b = phi_cyclotomic_over_F_closed_form(params), phi_cyclotomic_over_F_derived(params)
            return None if a == b else _enc(p=params.p, n=params.n, closed=a, derived=b)
        return check

    def lemma(params, points) -> Check:
        def check():
            phi_F = phi_cyclotomic_over_F_closed_form(params)
            phi_K = phi_cyclotomic_over_K(params)
            for r in points:
                if evaluate(phi_F, r) != (params.p - 1) * evaluate(phi_K, r):
                    return _enc(p=params.p, n=params.n, r=r)
            return None
        return check

    def table(params) -> Check:
        def check():
            p, n = params.p, params.n
            expected = [(0, (p - 1) * p ** (n - 1))] + [(p ** (k - 1), p ** (n - k)) for k in range(1, n + 1)]
            if p == 2:
                expected = [expected[0]] + expected[2:]
            got = list(cyclotomic_filtration(params).jumps)
            return None if got == expected else _enc(p=p, n=n, got=got, expected=expected)
        return check

    def vertices(params) -> Check:
        def check():
            p, n = params.p, params.n
            phi = phi_cyclotomic_over_K(params)
            want = tuple((Fraction(p ** k - 1), Fraction(k)) for k in range(n))
            # for p = 2 the vertex at 2^1 - 1 = 1 survives; (0, 0) is always first
            return None if phi.vertices == want else _enc(p=p, n=n, phi=phi)
        return check

    def tower(params) -> Check:
        def check():
            t = Tower((Tame(params.p - 1), Cyclotomic(params.p, params.n, BASE_QP_ZETA)))
            direct = resolve_phi(Cyclotomic(params.p, params.n, BASE_QP))
            return None if resolve_phi(t) == direct else _enc(p=params.p, n=params.n)
        return check

    def inflation(params) -> Check:
        def check():
            locus = inflation_locus(Cyclotomic(params.p, params.n, BASE_QP_ZETA))
            return None if locus == [(Fraction(0), None)] else _enc(p=params.p, n=params.n)
        return check

    lemma_pts = [
        [Fraction(1) + random_rational(rng, hi=2 * c.p ** c.n) for _ in range(per_case)]
        + [Fraction(rng.randint(0, 12), 12)]
        for c in grid
    ]
    return [
        run_property("closed-form phi_L/F equals psi_F/K o phi_L/K", (closed_vs_derived(c) for c in grid)),
        run_property("phi_L/F = (p-1) phi_L/K", (lemma(c, pts) for c, pts in zip(grid, lemma_pts))),
        run_property("filtration matches the cyclotomic table", (table(c) for c in grid)),
        run_property("phi_L/K vertices at (p^k - 1, k)", (vertices(c) for c in grid)),
        run_property("tame step then L/F tower equals L/K", (tower(c) for c in grid)),
        run_property("wild inflation over Qp(zeta_p) on all of (0, oo)", (inflation(c) for c in grid)),
    ]


def suite_depth(seed: int, cases: int) -> List[PropertyResult]:
    rng = random.Random(seed)
    specs = [random_spec(rng) for _ in range(cases)]
    depths = [random_rational(rng) for _ in range(cases)]

    def round_trip(spec, r) -> Check:
        def check():
            d = parameter_depth(spec, r)
            return None if character_depth_from_parameter(spec, d) == r else _enc(spec=spec, r=r)
        return check

    def gap(spec, r) -> Check:
        # psi has every slope <= e and psi(0) = 0, hence psi(r) <= e r, i.e. phi(e r) >= r
        def check():
            e = ramification_index(spec)
            psi = resolve_psi(spec)
            ok = all(s <= e for s in psi.slopes) and psi(0) == 0 and parameter_depth(spec, r) >= r
            return None if ok else _enc(spec=spec, r=r)
        return check

    def tame(e, r) -> Check:
        return lambda: (
            None if parameter_depth(Tame(e), r) == r and parameter_depth(Unramified(), r) == r
            else _enc(e=e, r=r)
        )

    def permutation(factors, ds) -> Check:
        def check():
            order = list(range(len(factors)))
            rng.shuffle(order)
            a = induced_torus_depth(InducedTorusSpec(tuple(factors)), ds)
            b = induced_torus_depth(InducedTorusSpec(tuple(factors[i] for i in order)), [ds[i] for i in order])
            return None if a == b else _enc(depths=ds, order=order)
        return check

    tori = []
    for _ in range(max(1, cases // 5)):
        k = rng.randint(1, 4)
        tori.append((
            [(random_spec(rng, 1), f"T{i + 1}") for i in range(k)],
            [random_rational(rng) for _ in range(k)],
        ))
    tames = [(rng.randint(1, 50), random_rational(rng)) for _ in range(cases)]
    return [
        run_property("character/parameter depth round trip", (round_trip(s, r) for s, r in zip(specs, depths))),
        run_property("parameter depth >= character depth", (gap(s, r) for s, r in zip(specs, depths))),
        run_property("tame and unramified preserve depth", (tame(e, r) for e, r in tames)),
        run_property("induced torus depth permutation invariant", (permutation(f, d) for f, d in tori)),
    ]


SUITES = {
    "pwl": suite_pwl,
    "ramification": suite_ramification,
    "cyclotomic": suite_cyclotomic,
    "depth": suite_depth,
}


def check_fixture(entries: List[Dict[str, Any]]) -> PropertyResult:
    """Check recorded claims ``{"spec", "phi"}``, ``{"spec", "points", "values"}``
    or ``{"spec", "depth", "parameter_depth"}`` against the library."""

    def claim(i: int, entry: Dict[str, Any]) -> Check:
        def check():
            spec = codec.spec_from_dict(entry["spec"])
            phi = resolve_phi(spec)
            if "phi" in entry and codec.pwl_from_dict(entry["phi"]) != phi:
                return {"entry": i, "claim": entry, "actual_phi": codec.pwl_to_dict(phi)}
            if "points" in entry:
                got = [format_rational(evaluate(phi, parse_rational(x))) for x in entry["points"]]
                want = [format_rational(parse_rational(v)) for v in entry["values"]]
                if got != want:
                    return {"entry": i, "claim": entry, "actual_values": got}
            if "depth" in entry:
                got = parameter_depth(spec, parse_rational(entry["depth"]))
                if got != parse_rational(entry["parameter_depth"]):
                    return {"entry": i, "claim": entry, "actual_parameter_depth": format_rational(got)}
            return None
        return check

    return run_property("fixture claims", (claim(i, e) for i, e in enumerate(entries)))


def run_verify(scope: str, seed: int, cases: int,
               fixture: Optional[List[Dict[str, Any]]] = None) -> List[PropertyResult]:
    scopes = SCOPES if scope == "all" else (scope,)
    results: List[PropertyResult] = []
    for name in scopes:
        results.extend(SUITES[name](seed, cases))
    if fixture is not None:
        results.append(check_fixture(fixture))
    return results
