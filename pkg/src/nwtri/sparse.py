"""Detection parameterised by edge count: degree split plus a dense subcall.

Triangles touching a vertex of degree below ``delta`` are found by scanning
that vertex's neighbour pairs. The rest live entirely among the at most
``2m / delta`` high-degree vertices and go to the dense algorithm.
"""

from __future__ import annotations

import math

from nwtri.bitlinalg import CostLedger
from nwtri.detect import detect
from nwtri.graph import TriangleWitness, Weight, WeightedGraph, induced_subgraph

DEFAULT_EXPONENT = 0.4


def default_delta(m: int, exponent: float = DEFAULT_EXPONENT) -> int:
    return max(1, math.ceil(m**exponent)) if m else 1


def split_by_degree(G: WeightedGraph, delta: int) -> tuple[list[int], list[int]]:
    if delta < 1:
        raise ValueError("degree threshold must be at least 1")
    low, high = [], []
    for v in range(G.n):
        (low if G.degree(v) < delta else high).append(v)
    return low, high


def enumerate_low_degree(
    G: WeightedGraph,
    low,
    target: Weight = 0,
    ledger: CostLedger | None = None,
) -> TriangleWitness | None:
    """First target-sum triangle through a low vertex, scanning ``v`` ascending and pairs ``u < w``.

    Adds the number of neighbour pairs examined to ``ledger.counters["enum_pairs"]``.
    """
    pairs = 0
    hit = None
    wt = G.weights
    for v in sorted(low):
        nb = sorted(G.neighbors[v])
        need = target - wt[v]
        for a, u in enumerate(nb):
            nu = G.neighbors[u]
            for w in nb[a + 1 :]:
                pairs += 1
                if w in nu and wt[u] + wt[w] == need:
                    hit = TriangleWitness(u, v, w, wt[u] + wt[v] + wt[w])
                    break
            if hit:
                break
        if hit:
            break
    if ledger is not None:
        ledger.counters["enum_pairs"] += pairs
    return hit


def detect_sparse(
    G: WeightedGraph,
    target: Weight = 0,
    delta: int | None = None,
    ledger: CostLedger | None = None,
    *,
    exponent: float = DEFAULT_EXPONENT,
    threads: int = 1,
) -> TriangleWitness | None:
    if ledger is None:
        ledger = CostLedger()
    if delta is None:
        delta = default_delta(G.m, exponent)
    low, high = split_by_degree(G, delta)
    ledger.counters["high_vertices"] += len(high)
    hit = enumerate_low_degree(G, low, target, ledger)
    if hit is not None:
        return hit
    if len(high) < 3:
        return None
    H, remap = induced_subgraph(G, high)
    back = {new: old for old, new in remap.items()}
    sub = detect(H, target, ledger, threads=threads)
    if sub is None:
        return None
    return TriangleWitness(back[sub.x], back[sub.y], back[sub.z], sub.weight_sum)


__all__ = ["default_delta", "split_by_degree", "enumerate_low_degree", "detect_sparse"]
