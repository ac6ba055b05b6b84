from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from nwtri.graph import WeightedGraph, parse_graph


@st.composite
def weighted_graphs(draw, max_n=12, low=-4, high=4, weights=None):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    if weights is None:
        weights = st.integers(min_value=low, max_value=high)
    ws = draw(st.lists(weights, min_size=n, max_size=n))
    return WeightedGraph(ws, [e for e, keep in zip(pairs, mask) if keep])


rationals = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=7)
)


def complete(weights):
    n = len(weights)
    return WeightedGraph(weights, combinations(range(n), 2))


def disjoint_union(*graphs):
    weights, edges, off = [], [], 0
    for G in graphs:
        weights += list(G.weights)
        edges += [(u + off, v + off) for u, v in G.edges]
        off += G.n
    return WeightedGraph(weights, edges)


@pytest.fixture
def k3():
    return parse_graph("3 3\n0 1\n1 2\n2 -3\n0 1\n1 2\n0 2")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if rep.when == "call" and "criterion" in props:
                lines.append((props["criterion"], outcome.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, outcome, detail in sorted(lines):
            terminalreporter.write_line(f"{crit}: {'PASS' if outcome == 'PASSED' else 'FAIL'}  {detail}")
