from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nwtri.graph import (
    GraphFormatError,
    WeightedGraph,
    build_slice,
    generate_random,
    graph_to_json,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from nwtri.oracle import brute_count, brute_triangle_count, triangles

from conftest import complete, rationals, weighted_graphs


def test_parse_k3(k3):
    assert k3.n == 3
    assert k3.weights == (1, 2, -3)
    assert k3.edges == {(0, 1), (1, 2), (0, 2)}
    assert k3.domain == "int"


def test_parse_single_vertex():
    G = parse_graph("1 0\n0 5")
    assert (G.n, G.m, G.weights) == (1, 0, (5,))


def test_parse_self_loop_reports_line():
    with pytest.raises(GraphFormatError, match="line 4: self-loop") as info:
        parse_graph("2 1\n0 1\n1 1\n0 0")
    assert info.value.line == 4


@pytest.mark.parametrize(
    "text, line, msg",
    [
        ("", 1, "header"),
        ("3\n", 1, "header"),
        ("2 1\n0 1\n1 1\n0 5", 4, "not a declared vertex"),
        ("3 2\n0 1\n1 1\n2 1\n0 1\n1 0", 6, "duplicate edge"),
        ("2 0\n0 1.5\n1 1", 2, "not an exact"),
        ("2 0\n0 1e3\n1 1", 2, "not an exact"),
        ("1 0\n0 9223372036854775808", 2, "64 bits"),
        ("2 0\n0 1\n0 2", 3, "duplicate vertex"),
        ("2 1\n0 1\n1 1", 3, "expected 2 vertex lines and 1 edge lines"),
        ("1 0\n0 1\n0 1", 3, "extra line"),
        ("1 0\n0 1/0", 2, "zero denominator"),
    ],
)
def test_parse_errors(text, line, msg):
    with pytest.raises(GraphFormatError, match=msg) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_comments_and_rationals():
    G = parse_graph("# header\n2 1\n0 1/2\n# mid\n1 -3/4\n0 1\n")
    assert G.weights == (Fraction(1, 2), Fraction(-3, 4))
    assert G.domain == "rational"


def test_parse_arbitrary_labels_use_order_of_appearance():
    G = parse_graph("3 2\na 4\nb 5\nc 6\nc a\nb c\n")
    assert G.weights == (4, 5, 6)
    assert G.edges == {(0, 2), (1, 2)}


def test_parse_numeric_labels_out_of_order():
    G = parse_graph("3 1\n2 -3\n0 1\n1 2\n0 2\n")
    assert G.weights == (1, 2, -3)
    assert G.edges == {(0, 2)}


def test_float_weights_rejected_by_constructor():
    with pytest.raises(TypeError):
        WeightedGraph([0.5], [])
    with pytest.raises(TypeError):
        WeightedGraph([True], [])


def test_constructor_validation():
    with pytest.raises(ValueError, match="self-loop"):
        WeightedGraph([0, 0], [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        WeightedGraph([0, 0], [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="outside"):
        WeightedGraph([0, 0], [(0, 2)])


@given(weighted_graphs())
def test_round_trip_text(G):
    assert parse_graph(serialize_graph(G)) == G


@given(weighted_graphs(weights=rationals))
def test_round_trip_rational(G):
    H = parse_graph(serialize_graph(G))
    assert H == G
    assert parse_graph(graph_to_json(G)) == G


@settings(max_examples=30)
@given(
    st.integers(0, 40),
    st.floats(0, 1),
    st.integers(0, 2**64 - 1),
    st.sampled_from(["uniform", "zipf", "constant"]),
)
def test_generate_round_trip_and_determinism(n, p, seed, dist):
    G = generate_random(n, p, -5, 5, seed, dist)
    H = generate_random(n, p, -5, 5, seed, dist)
    assert G == H
    assert np.array_equal(G.adjacency, H.adjacency)
    assert parse_graph(serialize_graph(G)) == G
    assert all(-5 <= w <= 5 for w in G.weights)


def test_generate_edge_cases():
    assert generate_random(0, 0.5).n == 0
    K5 = generate_random(5, 1.0, 0, 0, seed=3, distribution="constant")
    assert K5.m == 10 and K5.weights == (0,) * 5
    with pytest.raises(ValueError):
        generate_random(5, 1.5)
    with pytest.raises(ValueError):
        generate_random(5, 0.5, 3, 2)


def test_generate_zipf_is_skewed():
    G = generate_random(3000, 0.0, 1, 10, seed=1, distribution="zipf")
    counts = np.bincount(np.array(G.weights) - 1, minlength=10)
    # frequency of the k-th value ~ 1/k: first value about twice the second, ten times the last
    assert counts[0] > 1.6 * counts[1]
    assert counts[0] > 6 * counts[9]


def test_generated_census_matches_frozen_oracle():
    # values from the brute-force triple loop on this exact instance
    G = generate_random(50, 0.3, -8, 8, seed=7)
    assert G.m == 374
    assert brute_triangle_count(G) == 558
    c = brute_count(G, 0)
    assert (c.type1, c.type2, c.type3) == (14, 7, 0)


def test_build_slice_examples(k3):
    sl = build_slice(k3, lambda v: k3.weights[v] == 1, lambda v: k3.weights[v] == 2,
                     lambda v: k3.weights[v] == -3)
    assert sl.shape == (1, 1, 1)
    assert sl.adj_xy.get(0, 0) and sl.adj_yz.get(0, 0) and sl.adj_xz.get(0, 0)
    assert build_slice(k3, lambda v: False, lambda v: True, lambda v: True).shape == (0, 3, 3)
    K4 = complete([0, 0, 0, 0])
    assert build_slice(K4, *[lambda v: True] * 3).shape == (4, 4, 4)


@given(weighted_graphs(max_n=9), st.data())
def test_build_slice_soundness(G, data):
    preds = [data.draw(st.sets(st.integers(0, max(G.n - 1, 0)))) for _ in range(3)]
    sl = build_slice(G, *[lambda v, s=s: v in s for s in preds])
    xy, yz, xz = sl.adj_xy.to_bool(), sl.adj_yz.to_bool(), sl.adj_xz.to_bool()
    for i, x in enumerate(sl.x_ids):
        for j, y in enumerate(sl.y_ids):
            for k, z in enumerate(sl.z_ids):
                if xy[i, j] and yz[j, k] and xz[i, k]:
                    assert len({x, y, z}) == 3
                    assert tuple(sorted((int(x), int(y), int(z)))) in set(triangles(G))


def test_induced_subgraph():
    K4 = complete([1, 2, 3, 4])
    H, remap = induced_subgraph(K4, range(4))
    assert H == K4 and remap == {0: 0, 1: 1, 2: 2, 3: 3}
    H, remap = induced_subgraph(K4, [])
    assert H.n == 0 and remap == {}
    H, remap = induced_subgraph(K4, [0, 2, 3])
    assert H == complete([1, 3, 4])
    assert remap == {0: 0, 2: 1, 3: 2}
