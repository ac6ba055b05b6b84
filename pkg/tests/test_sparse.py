import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nwtri.bitlinalg import CostLedger
from nwtri.graph import WeightedGraph, generate_random
from nwtri.oracle import brute_detect
from nwtri.sparse import default_delta, detect_sparse, enumerate_low_degree, split_by_degree

from conftest import complete, disjoint_union, weighted_graphs


def test_split_star():
    star = WeightedGraph([0] * 10, [(0, i) for i in range(1, 10)])
    low, high = split_by_degree(star, 5)
    assert low == list(range(1, 10)) and high == [0]


def test_split_regular():
    cycle = WeightedGraph([0] * 8, [(i, (i + 1) % 8) for i in range(8)])
    assert split_by_degree(cycle, 3)[1] == []
    with pytest.raises(ValueError):
        split_by_degree(cycle, 0)


def test_split_high_bound_random():
    G = generate_random(50, 0.2, -3, 3, 4)
    delta = math.ceil(G.m**0.4)
    _, high = split_by_degree(G, delta)
    assert len(high) <= 2 * G.m / delta


def test_enumerate_examples():
    P4 = WeightedGraph([1, 2, -3, 0], [(0, 1), (1, 2), (2, 3)])
    assert enumerate_low_degree(P4, range(4), 0) is None
    K3 = complete([1, 2, -3])
    enumerate_low_degree(K3, range(3), 0).validate(K3, 0)


def test_detect_sparse_examples():
    assert detect_sparse(WeightedGraph([0] * 4, [(0, 1), (1, 2), (2, 3)]), 0) is None
    ring = WeightedGraph([5] * 60, [(i, (i + 1) % 60) for i in range(60)])
    G = disjoint_union(ring, complete([1, 2, -3]))
    for delta in (1, 2, 4, 16):
        detect_sparse(G, 0, delta).validate(G, 0)


def test_default_delta():
    assert default_delta(0) == 1
    assert default_delta(100) == math.ceil(100**0.4)


@settings(max_examples=100)
@given(weighted_graphs(max_n=16, low=-3, high=3), st.integers(-4, 4), st.sampled_from([1, 2, 3, 4, 64]))
def test_sparse_matches_oracle(G, target, delta):
    ledger = CostLedger()
    hit = detect_sparse(G, target, delta, ledger)
    assert (hit is None) == (brute_detect(G, target) is None)
    if hit:
        hit.validate(G, target)
    assert ledger.counters["high_vertices"] <= 2 * G.m / delta
    assert ledger.counters["enum_pairs"] <= G.m * delta
