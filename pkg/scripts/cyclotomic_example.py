"""Reproduce the Q_p(zeta_{p^n}) example: break tables, phi_{L/K}, phi_{L/F},
and the depth gap for characters of R_{L/F} G_m.

    python scripts/cyclotomic_example.py --primes 3 5 --exponents 2 3
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from hasse_herbrand.cyclotomic import (
    CyclotomicParams,
    cyclotomic_filtration,
    phi_cyclotomic_over_F_closed_form,
    phi_cyclotomic_over_F_derived,
    phi_cyclotomic_over_K,
)
from hasse_herbrand.depth import depth_report, inflation_locus
from hasse_herbrand.rational import format_rational as fmt
from hasse_herbrand.ramification import BASE_QP, BASE_QP_ZETA, Cyclotomic, upper_jumps


@dataclass
class Config:
    primes: List[int] = field(default_factory=lambda: [2, 3, 5, 7])
    exponents: List[int] = field(default_factory=lambda: [2, 3, 4])
    depths: List[Fraction] = field(default_factory=lambda: [Fraction(1, 2), Fraction(1), Fraction(3)])


def run(cfg: Config) -> None:
    for p in cfg.primes:
        for n in cfg.exponents:
            params = CyclotomicParams(p, n)
            filt = cyclotomic_filtration(params)
            phi_K = phi_cyclotomic_over_K(params)
            phi_F = phi_cyclotomic_over_F_closed_form(params)
            agree = phi_F == phi_cyclotomic_over_F_derived(params)
            print(f"p={p} n={n}  jumps={list(filt.jumps)}  upper={[fmt(v) for v in upper_jumps(filt)]}")
            print(f"  phi_L/K {phi_K}")
            print(f"  phi_L/F {phi_F}  (closed form == psi_F/K o phi_L/K: {agree})")
            spec = Cyclotomic(p, n, BASE_QP_ZETA)
            for r in cfg.depths:
                rep = depth_report(spec, r)
                print(f"  dep_T = {fmt(r):>4}  ->  dep_W = {fmt(rep.parameter_depth):>8}  gap {fmt(rep.gap)}")
            literal = inflation_locus(Cyclotomic(p, n, BASE_QP), scale=p ** (n - 1))
            shown = [(fmt(a), "oo" if b is None else fmt(b)) for a, b in literal]
            print(f"  {{r > 0 : phi_L/K(p^(n-1) r) > r}} = {shown}")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+")
    ap.add_argument("--exponents", type=int, nargs="+")
    args = ap.parse_args()
    cfg = Config()
    if args.primes:
        cfg.primes = args.primes
    if args.exponents:
        cfg.exponents = args.exponents
    run(cfg)


if __name__ == "__main__":
    main()
