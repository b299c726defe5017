from fractions import Fraction as F
from math import ceil, floor, prod

import pytest
from hypothesis import given, strategies as st

from hasse_herbrand.pwl import compose, evaluate, identity, invert, linear, pwl_from_segments, INFINITE
from hasse_herbrand.ramification import (
    BASE_QP,
    BASE_QP_ZETA,
    Cyclotomic,
    Filtration,
    RamificationFiltration,
    Tame,
    Tower,
    Unramified,
    phi_from_filtration,
    psi_from_filtration,
    ramification_index,
    resolve_phi,
    transport_upper_index,
    upper_breaks,
    upper_jumps,
)

from conftest import filtrations, nonneg, specs


def group_order(jumps, i):
    return max((u, o) for u, o in jumps if u <= i)[1]


def summation_oracle(filt, r):
    """sum_{i=1}^{floor r} |G_i|/|G_0| + (r - floor r) |G_ceil r|/|G_0|"""
    jumps, g0 = filt.jumps, filt.jumps[0][1]
    total = sum(F(group_order(jumps, i), g0) for i in range(1, floor(r) + 1))
    return total + (r - floor(r)) * F(group_order(jumps, ceil(r)), g0)


CYC_3_2 = RamificationFiltration(((0, 6), (1, 3), (3, 1)))


@pytest.mark.parametrize("jumps", [
    (),
    ((1, 2), (2, 1)),
    ((0, 4), (2, 4), (3, 1)),
    ((0, 6), (1, 4), (2, 1)),
    ((0, 4), (2, 2)),
    ((0, 4), (2, 1), (2, 1)),
    ((0, 4), (3, 2), (2, 1)),
])
def test_invalid_filtrations(jumps):
    with pytest.raises(ValueError):
        RamificationFiltration(jumps)


def test_from_pairs_drops_flat_entries():
    assert RamificationFiltration.from_pairs([(0, 4), (1, 4), (2, 2), (4, 1)]).jumps == (
        (0, 4), (2, 2), (4, 1))


def test_order_ceiling_convention():
    assert [CYC_3_2.order(v) for v in (0, F(1, 2), 1, 2, F(5, 2), 3, 10)] == [6, 3, 3, 3, 1, 1, 1]


def test_phi_examples():
    assert phi_from_filtration(RamificationFiltration(((0, 1),))) == identity()
    for e in (2, 3, 7):
        assert phi_from_filtration(RamificationFiltration(((0, e), (1, 1)))) == linear(F(1, e))
    phi = phi_from_filtration(CYC_3_2)
    assert phi.vertices == ((0, 0), (2, 1)) and phi.final_slope == F(1, 6)


@given(filtrations(), st.lists(nonneg, min_size=10, max_size=10))
def test_phi_matches_summation_oracle(filt, points):
    phi = phi_from_filtration(filt)
    for r in points:
        assert evaluate(phi, r) == summation_oracle(filt, r)


@given(filtrations())
def test_phi_concave_increasing(filt):
    phi = phi_from_filtration(filt)
    assert phi(0) == 0
    assert all(s > 0 for s in phi.slopes)
    assert phi.is_concave()


def test_psi_examples():
    assert psi_from_filtration(RamificationFiltration(((0, 5), (1, 1)))) == linear(5)
    assert psi_from_filtration(RamificationFiltration(((0, 1),))) == identity()


@given(filtrations())
def test_psi_inverts_phi(filt):
    phi, psi = phi_from_filtration(filt), psi_from_filtration(filt)
    assert compose(phi, psi) == identity() == compose(psi, phi)


def test_upper_breaks_examples():
    assert upper_breaks(RamificationFiltration(((0, 4), (1, 1)))) == [(0, 4), (F(1, 4), 1)]
    assert upper_breaks(RamificationFiltration(((0, 1),))) == [(0, 1)]
    # oracle: phi(1) = 3/6, phi(3) = 3/6 + 3/6 + 1/6
    expected = [(F(0), 6), (summation_oracle(CYC_3_2, 1), 3), (summation_oracle(CYC_3_2, 3), 1)]
    assert expected == [(0, 6), (F(1, 2), 3), (F(7, 6), 1)]
    assert upper_breaks(CYC_3_2) == expected


def test_upper_jumps_are_integral_for_abelian_example():
    # groups drop right after lower index 0 and 2; phi sends those to 0 and 1
    assert upper_jumps(CYC_3_2) == [0, 1]


@given(filtrations())
def test_upper_breaks_lower_back(filt):
    psi = psi_from_filtration(filt)
    assert [(evaluate(psi, v), o) for v, o in upper_breaks(filt)] == list(filt.jumps)
    vs = [v for v, _ in upper_breaks(filt)]
    assert all(a < b for a, b in zip(vs, vs[1:]))


def test_resolve_phi_basic_kinds():
    assert resolve_phi(Tame(2)) == linear(F(1, 2))
    assert resolve_phi(Unramified()) == identity()
    assert resolve_phi(Filtration(CYC_3_2)) == phi_from_filtration(CYC_3_2)


def test_tower_of_tame_and_wild_cyclotomic():
    for p, n in [(3, 2), (5, 3), (2, 3), (7, 2)]:
        tower = Tower((Tame(p - 1), Cyclotomic(p, n, BASE_QP_ZETA)))
        assert resolve_phi(tower) == resolve_phi(Cyclotomic(p, n, BASE_QP))
        assert ramification_index(tower) == ramification_index(Cyclotomic(p, n))


def test_tower_order_is_bottom_up():
    wild = Filtration(RamificationFiltration(((0, 2), (3, 1))))
    up = resolve_phi(Tower((Tame(3), wild)))
    down = resolve_phi(Tower((wild, Tame(3))))
    assert up == compose(linear(F(1, 3)), resolve_phi(wild))
    assert down == compose(resolve_phi(wild), linear(F(1, 3)))
    assert up != down


@given(specs)
def test_tower_with_unramified_bottom(spec):
    assert resolve_phi(Tower((Unramified(), spec))) == resolve_phi(spec)


@given(st.lists(filtrations(), min_size=2, max_size=3), nonneg)
def test_tower_transitivity(steps, x):
    tower = Tower(tuple(Filtration(f) for f in steps))
    y = x
    for f in reversed(steps):
        y = summation_oracle(f, y)
    assert evaluate(resolve_phi(tower), x) == y
    assert ramification_index(tower) == prod(f.ramification_index for f in steps)


def test_tower_validation():
    with pytest.raises(ValueError):
        Tower(())
    with pytest.raises(ValueError):
        Tower((Tame(2), "nope"))
    with pytest.raises(ValueError):
        Tame(0)
    with pytest.raises(ValueError):
        Cyclotomic(4, 2)
    with pytest.raises(ValueError):
        Cyclotomic(3, 0)
    with pytest.raises(ValueError):
        Cyclotomic(3, 2, "Q3(i)")


def test_ramification_indices():
    assert ramification_index(Cyclotomic(3, 2)) == 6
    assert ramification_index(Cyclotomic(3, 2, BASE_QP_ZETA)) == 3
    assert ramification_index(Cyclotomic(2, 1, BASE_QP)) == 1
    assert ramification_index(Unramified()) == 1
    assert ramification_index(Tower((Tame(2), Tame(5)))) == 10


def test_trivial_relative_cyclotomic_is_identity():
    assert resolve_phi(Cyclotomic(5, 1, BASE_QP_ZETA)) == identity()


def test_transport_upper_index_examples():
    assert transport_upper_index(0, Cyclotomic(5, 3)) == 0
    assert transport_upper_index(F(3, 7), Tame(4)) == F(12, 7)
    # psi_{L/K} for p = 3, n = 2 reflects the vertex (2, 1) to (1, 2)
    assert transport_upper_index(1, Cyclotomic(3, 2, BASE_QP)) == 2
    with pytest.raises(ValueError):
        transport_upper_index(-1, Tame(2))


@given(specs, nonneg, nonneg)
def test_transport_monotone(spec, a, b):
    lo, hi = sorted((a, b))
    assert transport_upper_index(lo, spec) <= transport_upper_index(hi, spec)
    assert evaluate(resolve_phi(spec), transport_upper_index(hi, spec)) == hi
