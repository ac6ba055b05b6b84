import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from nwtri.bitlinalg import (
    WORD_BITS,
    BitMatrix,
    CostLedger,
    TripartiteSlice,
    bool_product,
    column_blocks,
    triangle_count_assigned,
    triangle_count_within,
    triangle_exists,
)
from nwtri.graph import generate_random, slice_from_ids
from nwtri.oracle import brute_triangle_count

from conftest import complete


def scalar_product(A, B):
    r, k = A.shape
    c = B.shape[1]
    C = np.zeros((r, c), dtype=bool)
    for i in range(r):
        for j in range(c):
            for t in range(k):
                if A[i, t] and B[t, j]:
                    C[i, j] = True
                    break
    return C


def brute_slice_triples(sl):
    xy, yz, xz = sl.adj_xy.to_bool(), sl.adj_yz.to_bool(), sl.adj_xz.to_bool()
    nx, ny, nz = sl.shape
    return [
        (i, j, k)
        for i in range(nx)
        for k in range(nz)
        for j in range(ny)
        if xy[i, j] and yz[j, k] and xz[i, k]
    ]


def bool_matrices(rows, cols):
    return arrays(bool, (rows, cols))


@given(st.integers(0, 3), st.integers(0, 130), st.data())
def test_pack_round_trip(rows, cols, data):
    arr = data.draw(bool_matrices(rows, cols))
    M = BitMatrix.from_bool(arr)
    assert M.stride == -(-cols // WORD_BITS)
    assert M.data.shape == (rows, M.stride)
    assert M.padding_clean()
    assert np.array_equal(M.to_bool(), arr)
    assert M.transpose().transpose() == M


def test_identity_and_zero():
    rng = np.random.default_rng(1)
    B = BitMatrix.from_bool(rng.random((3, 5)) < 0.5)
    assert bool_product(BitMatrix.identity(3), B) == B
    Z = bool_product(BitMatrix.zeros(4, 3), B)
    assert Z == BitMatrix.zeros(4, 5)


def test_product_matches_scalar_oracle_frozen():
    rng = np.random.default_rng(0)
    A = rng.random((20, 30)) < 0.2
    B = rng.random((30, 40)) < 0.2
    C = bool_product(BitMatrix.from_bool(A), BitMatrix.from_bool(B))
    assert np.array_equal(C.to_bool(), scalar_product(A, B))
    # popcount of the triple-loop product for this seed
    assert C.popcount() == 593


@settings(max_examples=60)
@given(st.integers(1, 9), st.integers(0, 9), st.integers(0, 200), st.data())
def test_product_property(r, k, c, data):
    A = data.draw(bool_matrices(r, k))
    B = data.draw(bool_matrices(k, c))
    ledger = CostLedger()
    C = bool_product(BitMatrix.from_bool(A), BitMatrix.from_bool(B), ledger)
    assert np.array_equal(C.to_bool(), scalar_product(A, B))
    assert C.padding_clean()
    for rec in ledger.calls:
        assert rec.word_ops >= -(-k // WORD_BITS)


@settings(max_examples=30)
@given(st.integers(1, 6), st.data())
def test_product_associative(n, data):
    A, B, C = (BitMatrix.from_bool(data.draw(bool_matrices(n, n))) for _ in range(3))
    assert bool_product(bool_product(A, B), C) == bool_product(A, bool_product(B, C))


def test_wide_product_is_split_into_blocks():
    rng = np.random.default_rng(5)
    A = rng.random((130, 70)) < 0.1
    B = rng.random((70, 700)) < 0.1
    ledger = CostLedger()
    C = bool_product(BitMatrix.from_bool(A), BitMatrix.from_bool(B), ledger)
    assert np.array_equal(C.to_bool(), scalar_product(A, B))
    widths = [rec.z for rec in ledger.calls]
    assert len(widths) == len(column_blocks(-(-700 // 64), 130)) > 1
    assert sum(widths) == 700
    assert all(w <= 130 for w in widths)


def test_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        bool_product(BitMatrix.zeros(2, 3), BitMatrix.zeros(4, 2))


def test_triangle_exists_k3():
    K3 = complete([1, 2, -3])
    dec = triangle_exists(slice_from_ids(K3, [0], [1], [2]))
    assert dec.found and dec.witness == (0, 1, 2)


def test_no_closing_edge():
    K3 = complete([0, 0, 0])
    sl = slice_from_ids(K3, [0], [1], [2])
    sl = TripartiteSlice(sl.x_ids, sl.y_ids, sl.z_ids, sl.adj_xy, sl.adj_yz, BitMatrix.zeros(1, 1))
    assert not triangle_exists(sl).found


@pytest.mark.parametrize("seed", range(8))
def test_slice_primitives_match_triple_loop(seed):
    G = generate_random(40, 0.35, 0, 0, seed, "constant")
    rng = np.random.default_rng(seed)
    X, Y, Z = (np.flatnonzero(rng.random(40) < 0.5) for _ in range(3))
    sl = slice_from_ids(G, X, Y, Z)
    triples = brute_slice_triples(sl)
    dec = triangle_exists(sl)
    assert dec.found == bool(triples)
    if triples:
        i, j, k = triples[0]  # X ascending, then Z, then Y
        assert dec.witness == (X[i], Y[j], Z[k])
    assert triangle_count_assigned(sl) == len(triples)


def test_assigned_count_k4():
    K4 = complete([0] * 4)
    allv = range(4)
    assert triangle_count_assigned(slice_from_ids(K4, allv, allv, allv)) == 24
    assert triangle_count_within(K4, allv) == 4
    assert triangle_count_within(complete([0] * 3), range(3)) == 1


@pytest.mark.parametrize("seed", range(5))
def test_count_within_random_half(seed):
    G = generate_random(40, 0.4, 0, 0, seed, "constant")
    rng = np.random.default_rng(100 + seed)
    S = np.flatnonzero(rng.random(40) < 0.5)
    from nwtri.graph import induced_subgraph

    H, _ = induced_subgraph(G, S)
    assigned = triangle_count_assigned(slice_from_ids(G, S, S, S))
    assert assigned % 6 == 0
    assert triangle_count_within(G, S) == brute_triangle_count(H)


def test_ledger_totals_and_monotonicity():
    G = generate_random(30, 0.5, 0, 0, 1, "constant")
    ledger = CostLedger()
    seen = []
    allv = range(30)
    for _ in range(3):
        triangle_count_assigned(slice_from_ids(G, allv, allv, allv), ledger)
        triangle_exists(slice_from_ids(G, allv, allv, allv), ledger)
        seen.append(ledger.word_ops)
    assert seen == sorted(seen)
    assert ledger.totals()["word_ops"] == sum(c.word_ops for c in ledger.calls)
    assert ledger.slice_size_sum() == 6 * 3 * 30 * 30


def test_empty_slice_counts_zero():
    sl = TripartiteSlice([], [], [], BitMatrix.zeros(0, 0), BitMatrix.zeros(0, 0), BitMatrix.zeros(0, 0))
    assert triangle_count_assigned(sl) == 0
    assert not triangle_exists(sl).found


def test_count_overflow_guard(monkeypatch):
    import nwtri.bitlinalg as bl

    monkeypatch.setattr(bl, "COUNT_LIMIT", 26)
    allv = range(3)
    with pytest.raises(OverflowError):
        triangle_count_assigned(slice_from_ids(complete([0] * 3), allv, allv, allv))
