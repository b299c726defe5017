from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hasse_herbrand.pwl import INFINITE, pwl_from_segments
from hasse_herbrand.ramification import (
    BASE_QP,
    BASE_QP_ZETA,
    Cyclotomic,
    Filtration,
    RamificationFiltration,
    Tame,
    Tower,
    Unramified,
)

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

positive = st.fractions(min_value=Fraction(1, 30), max_value=50, max_denominator=30)
nonneg = st.fractions(min_value=0, max_value=200, max_denominator=30)


@st.composite
def pwl_functions(draw, start_zero=True):
    start = Fraction(0) if start_zero else draw(st.fractions(min_value=0, max_value=10, max_denominator=10))
    segs = draw(st.lists(st.tuples(positive, positive), max_size=5))
    return pwl_from_segments(start, segs + [(INFINITE, draw(positive))])


@st.composite
def filtrations(draw):
    factors = draw(st.lists(st.sampled_from([2, 3, 4, 5, 7]), max_size=4))
    gaps = draw(st.lists(st.integers(1, 12), min_size=len(factors), max_size=len(factors)))
    if not factors:
        return RamificationFiltration(((0, 1),))
    orders = [1]
    for f in factors:
        orders.append(orders[-1] * f)
    orders.reverse()
    positions = [0]
    for g in gaps:
        positions.append(positions[-1] + g)
    return RamificationFiltration(tuple(zip(positions, orders)))


leaf_specs = st.one_of(
    filtrations().map(Filtration),
    st.integers(1, 30).map(Tame),
    st.just(Unramified()),
    st.builds(Cyclotomic, st.sampled_from([2, 3, 5, 7]), st.integers(1, 3),
              st.sampled_from([BASE_QP, BASE_QP_ZETA])),
)
specs = st.recursive(
    leaf_specs,
    lambda children: st.lists(children, min_size=1, max_size=3).map(lambda s: Tower(tuple(s))),
    max_leaves=4,
)


# one pass/fail line per acceptance criterion in the terminal summary
_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
