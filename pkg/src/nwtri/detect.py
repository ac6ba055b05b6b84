"""Zero-sum (or target-sum) node-weighted triangle detection in matrix-multiplication time.

The outer loop fixes a pivot weight ``w``. Weights ranked at or below ``w``
by frequency are packed greedily into parts of total frequency at most
``2 f(w)``. For each part ``P`` the search is the unweighted triangle
problem on ``X = {wt = w}``, ``Y = {wt in P}``, ``Z = {target - w - wt in P}``
after dropping every Y-Z edge whose weights do not complete the target.
A triangle is found from the pivot holding its most frequent weight, with
the second-ranked weight in ``Y``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, TypeVar

import numpy as np

from nwtri.bitlinalg import (
    CostLedger,
    PivotRecord,
    SliceDecision,
    TripartiteSlice,
    triangle_exists,
)
from nwtri.graph import TriangleWitness, Weight, WeightedGraph

T = TypeVar("T")


@dataclass
class FrequencyTable:
    """Distinct weights with their frequencies and member vertices.

    ``weights`` is ascending by value; ``rank_order`` is ascending by
    ``(frequency, weight)``, the strict total order used for ``W'``.
    ``wid[v]`` is the index of ``wt(v)`` in ``weights``.
    """

    weights: list[Weight]
    freq: dict
    members: dict
    index: dict
    wid: np.ndarray
    rank_order: list[Weight]
    rank: dict

    @property
    def n(self) -> int:
        return len(self.wid)

    def __contains__(self, w: Weight) -> bool:
        return w in self.index


def build_frequency_table(G: WeightedGraph) -> FrequencyTable:
    buckets: dict = {}
    for v, w in enumerate(G.weights):
        buckets.setdefault(w, []).append(v)
    weights = sorted(buckets)
    index = {w: i for i, w in enumerate(weights)}
    wid = np.fromiter((index[w] for w in G.weights), dtype=np.int64, count=G.n)
    freq = {w: len(buckets[w]) for w in weights}
    members = {w: np.asarray(buckets[w], dtype=np.int64) for w in weights}
    rank_order = sorted(weights, key=lambda w: (freq[w], w))
    rank = {w: r for r, w in enumerate(rank_order)}
    return FrequencyTable(weights, freq, members, index, wid, rank_order, rank)


@dataclass(frozen=True)
class WeightPartition:
    pivot_weight: Weight
    pivot_freq: int
    parts: tuple[tuple[Weight, ...], ...]
    part_freqs: tuple[int, ...]

    @property
    def cap(self) -> int:
        return 2 * self.pivot_freq

    def check(self, n: int) -> None:
        """Assert the size guarantees the running-time argument depends on."""
        f = self.pivot_freq
        for i, s in enumerate(self.part_freqs):
            assert s <= 2 * f, f"part {i} frequency {s} exceeds cap {2 * f}"
            if i < len(self.part_freqs) - 1:
                assert s > f, f"non-final part {i} frequency {s} <= f(pivot) = {f}"
        assert len(self.parts) <= n / f + 1, f"{len(self.parts)} parts > n/f + 1"


def greedy_partition(table: FrequencyTable, pivot: Weight) -> WeightPartition:
    """Scan ``W'`` in rank order, closing a part right before it would exceed ``2 f(pivot)``."""
    if pivot not in table:
        raise KeyError(f"pivot weight {pivot!r} does not occur in the graph")
    f = table.freq[pivot]
    cap = 2 * f
    parts: list[tuple] = []
    sums: list[int] = []
    cur: list = []
    cur_sum = 0
    for u in table.rank_order[: table.rank[pivot] + 1]:
        fu = table.freq[u]
        if cur and cur_sum + fu > cap:
            parts.append(tuple(cur))
            sums.append(cur_sum)
            cur, cur_sum = [], 0
        cur.append(u)
        cur_sum += fu
    parts.append(tuple(cur))
    sums.append(cur_sum)
    return WeightPartition(pivot, f, tuple(parts), tuple(sums))


def complement_ids(table: FrequencyTable, base: Weight, target: Weight) -> np.ndarray:
    """For each distinct weight ``u``, the index of ``target - base - u`` or -1 if absent."""
    return np.fromiter(
        (table.index.get(target - (base + u), -1) for u in table.weights),
        dtype=np.int64,
        count=len(table.weights),
    )


def _check_uniform(G: WeightedGraph, X) -> Weight:
    if len(X) == 0:
        raise ValueError("X must be non-empty")
    w = G.weights[int(X[0])]
    for x in X:
        if G.weights[int(x)] != w:
            raise ValueError(f"X is not weight-uniform: wt({int(x)}) = {G.weights[int(x)]} != {w}")
    return w


def filtered_slice(
    G: WeightedGraph,
    X,
    Y,
    Z,
    target: Weight,
    table: FrequencyTable | None = None,
    distinct: bool = False,
) -> TripartiteSlice:
    """Slice over ``X x Y x Z`` keeping only Y-Z edges with ``w + wt(y) + wt(z) == target``.

    With ``distinct`` set, pairs are also dropped unless ``w``, ``wt(y)`` and
    ``wt(z)`` are pairwise different.
    """
    w = _check_uniform(G, X)
    if table is None:
        table = build_frequency_table(G)
    Y = np.asarray(Y, dtype=np.int64)
    Z = np.asarray(Z, dtype=np.int64)
    comp = complement_ids(table, w, target)
    need = comp[table.wid[Y]]
    zw = table.wid[Z]
    mask = need[:, None] == zw[None, :]
    if distinct:
        wi = table.index[w]
        mask &= (table.wid[Y] != wi)[:, None]
        mask &= (zw != wi)[None, :]
        mask &= table.wid[Y][:, None] != zw[None, :]
    return TripartiteSlice.from_adjacency(G.adjacency, X, Y, Z, yz_mask=mask)


def uniform_slice_detect(
    G: WeightedGraph,
    X,
    Y,
    Z,
    target: Weight = 0,
    ledger: CostLedger | None = None,
    table: FrequencyTable | None = None,
) -> SliceDecision:
    """Decide whether some triangle in ``X x Y x Z`` sums to ``target``; X must be weight-uniform."""
    return triangle_exists(filtered_slice(G, X, Y, Z, target, table), ledger)


@dataclass(frozen=True)
class PivotPlan:
    """One pivot's partition with its Y and Z vertex sets per part."""

    partition: WeightPartition
    X: np.ndarray
    Ys: tuple[np.ndarray, ...]
    Zs: tuple[np.ndarray, ...]

    def record(self) -> PivotRecord:
        p = self.partition
        return PivotRecord(p.pivot_weight, p.pivot_freq, p.part_freqs, tuple(len(z) for z in self.Zs))


def plan_pivot(
    table: FrequencyTable, pivot: Weight, target: Weight, exclude_pivot: bool = False
) -> PivotPlan:
    """Partition ``W'`` and bucket every vertex by the part holding its complement weight.

    Bucketing is one pass over the vertices. ``exclude_pivot`` removes the
    pivot weight from Y and Z (used by distinct-weight counting).
    """
    part = greedy_partition(table, pivot)
    part_of = np.full(len(table.weights), -1, dtype=np.int64)
    for i, P in enumerate(part.parts):
        for u in P:
            part_of[table.index[u]] = i
    comp = complement_ids(table, pivot, target)
    zpart_by_weight = np.where(comp >= 0, part_of[comp], -1)
    pivot_id = table.index[pivot]
    if exclude_pivot:
        zpart_by_weight[pivot_id] = -1
    zpart = zpart_by_weight[table.wid]
    order = np.argsort(zpart, kind="stable")
    bounds = np.searchsorted(zpart[order], np.arange(len(part.parts) + 1))
    Zs = tuple(order[bounds[i] : bounds[i + 1]] for i in range(len(part.parts)))

    ypart = part_of[table.wid]
    if exclude_pivot:
        ypart = np.where(table.wid == pivot_id, -1, ypart)
    yorder = np.argsort(ypart, kind="stable")
    ybounds = np.searchsorted(ypart[yorder], np.arange(len(part.parts) + 1))
    Ys = tuple(yorder[ybounds[i] : ybounds[i + 1]] for i in range(len(part.parts)))
    return PivotPlan(part, table.members[pivot], Ys, Zs)


def ordered_map(fn: Callable[[int], T], n_items: int, threads: int = 1) -> Iterator[T]:
    """Yield ``fn(0), fn(1), ...`` in index order, evaluating ahead on a thread pool."""
    if threads <= 1 or n_items <= 1:
        for i in range(n_items):
            yield fn(i)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, i) for i in range(n_items)]
        try:
            for fut in futures:
                yield fut.result()
        finally:
            for fut in futures:
                fut.cancel()


def detect(
    G: WeightedGraph,
    target: Weight = 0,
    ledger: CostLedger | None = None,
    *,
    threads: int = 1,
    exhaustive: bool = False,
    table: FrequencyTable | None = None,
) -> TriangleWitness | None:
    """Return a triangle with ``wt(x) + wt(y) + wt(z) == target``, or None.

    The first hit in (pivot ascending, part index) order wins, regardless of
    ``threads``. ``exhaustive`` keeps scanning after a hit so the ledger
    reflects the full worst-case work.
    """
    if ledger is None:
        ledger = CostLedger()
    ledger.counters["detect_calls"] += 1
    if G.n < 3 or G.m < 3:
        return None
    if table is None:
        table = build_frequency_table(G)

    found: TriangleWitness | None = None
    for pivot in table.weights:
        plan = plan_pivot(table, pivot, target)
        ledger.pivots.append(plan.record())
        live = [i for i, Z in enumerate(plan.Zs) if len(Z)]

        def run(j: int, plan=plan, live=live):
            i = live[j]
            local = CostLedger()
            dec = uniform_slice_detect(G, plan.X, plan.Ys[i], plan.Zs[i], target, local, table)
            return dec, local

        for dec, local in ordered_map(run, len(live), threads):
            ledger.merge(local)
            if dec.found and found is None:
                x, y, z = dec.witness
                found = TriangleWitness(x, y, z, G.weights[x] + G.weights[y] + G.weights[z])
                if not exhaustive:
                    return found
    return found


def detect_bool(G: WeightedGraph, target: Weight = 0, **kw) -> bool:
    return detect(G, target, **kw) is not None


def pivot_partitions(G: WeightedGraph) -> list[WeightPartition]:
    table = build_frequency_table(G)
    return [greedy_partition(table, w) for w in table.weights]


__all__ = [
    "FrequencyTable",
    "WeightPartition",
    "PivotPlan",
    "build_frequency_table",
    "greedy_partition",
    "complement_ids",
    "filtered_slice",
    "uniform_slice_detect",
    "plan_pivot",
    "ordered_map",
    "detect",
    "pivot_partitions",
]
