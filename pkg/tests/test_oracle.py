from hypothesis import given

from nwtri.graph import WeightedGraph
from nwtri.oracle import brute_count, brute_detect, brute_min, triangles

from conftest import complete, disjoint_union, weighted_graphs


def test_oracle_examples():
    K3 = complete([1, 2, -3])
    assert brute_detect(K3, 0).ids == (0, 1, 2)
    assert brute_detect(WeightedGraph([0] * 5, []), 0) is None
    c = brute_count(complete([0] * 4), 0)
    assert (c.type1, c.type2, c.type3, c.total) == (0, 0, 4, 4)
    c = brute_count(complete([1, 1, -2]), 0)
    assert (c.type1, c.type2, c.type3) == (0, 1, 0)
    c = brute_count(disjoint_union(K3, complete([0, 0, 0])), 0)
    assert (c.type1, c.type2, c.type3) == (1, 0, 1)
    assert brute_min(WeightedGraph([1, 2, 3], [(0, 1)])) is None
    assert brute_min(K3)[1] == 0
    w, s = brute_min(complete([-1, -2, 3, 0]))
    assert s == -3 and w.ids == (0, 1, 3)


@given(weighted_graphs(max_n=10))
def test_oracle_self_consistency(G):
    for target in range(-6, 7):
        assert (brute_count(G, target).total >= 1) == (brute_detect(G, target) is not None)
    best = brute_min(G)
    sums = [sum(G.weights[v] for v in t) for t in triangles(G)]
    assert (best is None) == (not sums)
    if sums:
        assert best[1] == min(sums)
