"""Exit criteria; the terminal summary prints one PASS/FAIL line per test.

All comparisons are exact.
"""
import json
import random
import time
from fractions import Fraction as F

import pytest

from hasse_herbrand import codec
from hasse_herbrand.cli import main
from hasse_herbrand.cyclotomic import (
    CyclotomicParams,
    cyclotomic_filtration,
    phi_cyclotomic_over_F_closed_form,
    phi_cyclotomic_over_F_derived,
    phi_cyclotomic_over_K,
)
from hasse_herbrand.depth import depth_report, inflation_locus, parameter_depth
from hasse_herbrand.pwl import evaluate
from hasse_herbrand.ramification import BASE_QP, BASE_QP_ZETA, Cyclotomic, Tame
from hasse_herbrand.verify import random_pwl, random_spec

GRID = [(p, n) for p in (2, 3, 5, 7) for n in (2, 3, 4)]


def test_criterion_1_closed_form_equals_filtration_route():
    start = time.perf_counter()
    for p, n in GRID:
        params = CyclotomicParams(p, n)
        assert phi_cyclotomic_over_F_derived(params) == phi_cyclotomic_over_F_closed_form(params), (p, n)
    assert time.perf_counter() - start < 1.0


def test_criterion_2_relative_identity():
    rng = random.Random(2)
    for p, n in GRID:
        params = CyclotomicParams(p, n)
        phi_F, phi_K = phi_cyclotomic_over_F_closed_form(params), phi_cyclotomic_over_K(params)
        for _ in range(50):
            r = 1 + F(rng.randint(0, 4000), rng.randint(1, 40))
            assert evaluate(phi_F, r) == (p - 1) * evaluate(phi_K, r), (p, n, r)


def test_criterion_3_cyclotomic_break_table():
    for p, n in GRID:
        jumps = cyclotomic_filtration(CyclotomicParams(p, n)).jumps
        positions = [0, 1] + [p ** k for k in range(1, n)]
        orders = [(p - 1) * p ** (n - 1)] + [p ** (n - k) for k in range(1, n + 1)]
        if p == 2:
            # G_0 = G_1 since p - 1 = 1: the u = 1 entry carries no drop
            positions, orders = positions[:1] + positions[2:], orders[:1] + orders[2:]
        assert [u for u, _ in jumps] == positions, (p, n)
        assert [o for _, o in jumps] == orders, (p, n)


def test_criterion_4_tame_preservation():
    rng = random.Random(4)
    for e in range(2, 51):
        for _ in range(20):
            r = F(rng.randint(0, 1000), rng.randint(1, 50))
            report = depth_report(Tame(e), r)
            assert report.gap == 0 and report.preserved, (e, r)


def test_criterion_5_wild_inflation_over_Qp_zeta_p():
    for p, n in GRID:
        assert inflation_locus(Cyclotomic(p, n, BASE_QP_ZETA)) == [(0, None)], (p, n)
    assert parameter_depth(Cyclotomic(3, 2, BASE_QP_ZETA), 1) == F(7, 3)


def last_segment_crossing(p, n):
    """Solve phi_{L/K}(p^(n-1) r) = r on the final piece by hand.

    There phi_{L/K}(x) = (n-1) + (x - p^(n-1) + 1) / ((p-1) p^(n-1)); with
    x = p^(n-1) r this is a + b r with b = 1/(p-1).
    """
    q = p ** (n - 1)
    a = (n - 1) + F(1 - q, (p - 1) * q)
    b = F(1, p - 1)
    return a / (1 - b)


def test_criterion_6_discrepancy_witness_for_literal_statement():
    spec = Cyclotomic(3, 2, BASE_QP)
    # the literal statement scales by p^(n-1) = 3, not by the ramification index 6 of L/K
    locus = inflation_locus(spec, scale=3)
    assert len(locus) == 1
    a, c = locus[0]
    assert a == 0 and c is not None
    assert c == last_segment_crossing(3, 2)
    # the crossing lies on the final piece, so the hand solution is valid
    assert 3 * c > 3 ** 1 - 1
    phi = phi_cyclotomic_over_K(CyclotomicParams(3, 2))
    assert evaluate(phi, 3 * (c + 1)) < c + 1


def test_criterion_7_verify_all(capsys):
    start = time.perf_counter()
    code = main(["--seed", "0", "verify", "all", "--cases", "1000"])
    elapsed = time.perf_counter() - start
    summary = json.loads(capsys.readouterr().out)["results"]
    failing = [p for p in summary["properties"] if not p["passed"]]
    assert code == 0 and not failing, failing
    counts = {p["property"]: p["cases"] for p in summary["properties"]}
    assert counts["psi o phi and phi o psi are the identity"] >= 1000
    assert counts["phi strictly increasing and concave"] >= 1000
    assert counts["tower transitivity"] >= 200
    assert counts["phi matches unit-interval summation"] >= 1000
    assert counts["character/parameter depth round trip"] >= 500
    assert counts["induced torus depth permutation invariant"] >= 1
    assert elapsed < 30


def test_criterion_8_json_round_trip():
    rng = random.Random(8)
    for _ in range(500):
        f = random_pwl(rng, start_zero=rng.random() < 0.5)
        text = json.dumps(codec.pwl_to_dict(f))
        back = codec.pwl_from_dict(json.loads(text))
        assert back == f and json.dumps(codec.pwl_to_dict(back)) == text
        spec = random_spec(rng)
        text = json.dumps(codec.spec_to_dict(spec))
        back = codec.spec_from_dict(json.loads(text))
        assert back == spec and json.dumps(codec.spec_to_dict(back)) == text
