"""Cubic brute-force reference answers.

Deliberately shares nothing with the matrix pipeline beyond the graph model:
plain neighbour sets and triple loops only.
"""

from __future__ import annotations

from nwtri.graph import CountBreakdown, TriangleWitness, Weight, WeightedGraph


def triangles(G: WeightedGraph):
    """All triangles as ascending ``(x, y, z)``, in lexicographic order."""
    nb = G.neighbors
    for x in range(G.n):
        for y in range(x + 1, G.n):
            if y not in nb[x]:
                continue
            for z in range(y + 1, G.n):
                if z in nb[x] and z in nb[y]:
                    yield x, y, z


def brute_detect(G: WeightedGraph, target: Weight = 0) -> TriangleWitness | None:
    wt = G.weights
    for x, y, z in triangles(G):
        if wt[x] + wt[y] + wt[z] == target:
            return TriangleWitness(x, y, z, wt[x] + wt[y] + wt[z])
    return None


def brute_count(G: WeightedGraph, target: Weight = 0) -> CountBreakdown:
    wt = G.weights
    by_type = [0, 0, 0]
    for x, y, z in triangles(G):
        if wt[x] + wt[y] + wt[z] != target:
            continue
        distinct = len({wt[x], wt[y], wt[z]})
        by_type[3 - distinct] += 1
    return CountBreakdown(*by_type)


def brute_min(G: WeightedGraph) -> tuple[TriangleWitness, Weight] | None:
    wt = G.weights
    best = None
    for x, y, z in triangles(G):
        s = wt[x] + wt[y] + wt[z]
        if best is None or s < best[1]:
            best = (TriangleWitness(x, y, z, s), s)
    return best


def brute_triangle_count(G: WeightedGraph) -> int:
    return sum(1 for _ in triangles(G))
