"""Exact counting of triangles whose node weights sum to a target.

Solutions are split by their weight multiset:

* type 1, three distinct weights: the pivot loop from ``detect`` with pairs
  restricted to distinct weights sees each one exactly three times;
* type 2, exactly two equal weights ``w, w, target - 2w``: counted as ordered
  pairs inside ``{wt = w}``, so exactly twice;
* type 3, all weights ``target / 3``: plain triangle count inside that class.
"""

from __future__ import annotations

from fractions import Fraction

from nwtri.bitlinalg import CostLedger, triangle_count_assigned, triangle_count_within
from nwtri.detect import (
    FrequencyTable,
    build_frequency_table,
    filtered_slice,
    ordered_map,
    plan_pivot,
)
from nwtri.graph import CountBreakdown, Weight, WeightedGraph, slice_from_ids

MAX_COUNT_VERTICES = 2_000_000


class CountingDefect(AssertionError):
    """A multiplicity identity failed; indicates a bug, never bad input."""


def uniform_slice_count(
    G: WeightedGraph,
    X,
    Y,
    Z,
    target: Weight = 0,
    distinct_filter: bool = False,
    ledger: CostLedger | None = None,
    table: FrequencyTable | None = None,
) -> int:
    """Role-assigned triples in ``X x Y x Z`` summing to ``target``; X must be weight-uniform."""
    sl = filtered_slice(G, X, Y, Z, target, table, distinct=distinct_filter)
    return triangle_count_assigned(sl, ledger)


def _guard(G: WeightedGraph) -> None:
    if G.n > MAX_COUNT_VERTICES:
        raise OverflowError(
            f"counting mode accepts at most {MAX_COUNT_VERTICES} vertices, got {G.n}"
        )


def count_type1(
    G: WeightedGraph,
    target: Weight = 0,
    ledger: CostLedger | None = None,
    *,
    threads: int = 1,
    table: FrequencyTable | None = None,
) -> tuple[int, int]:
    """(raw, raw / 3) for solutions with three distinct weights."""
    _guard(G)
    if ledger is None:
        ledger = CostLedger()
    if table is None:
        table = build_frequency_table(G)
    raw = 0
    for pivot in table.weights:
        plan = plan_pivot(table, pivot, target, exclude_pivot=True)
        ledger.pivots.append(plan.record())
        live = [i for i in range(len(plan.Zs)) if len(plan.Zs[i]) and len(plan.Ys[i])]

        def run(j: int, plan=plan, live=live):
            i = live[j]
            local = CostLedger()
            c = uniform_slice_count(
                G, plan.X, plan.Ys[i], plan.Zs[i], target, True, local, table
            )
            return c, local

        for c, local in ordered_map(run, len(live), threads):
            ledger.merge(local)
            raw += c
    if raw % 3:
        raise CountingDefect(f"type-1 raw count {raw} is not a multiple of 3")
    return raw, raw // 3


def count_type2(
    G: WeightedGraph,
    target: Weight = 0,
    ledger: CostLedger | None = None,
    *,
    table: FrequencyTable | None = None,
) -> tuple[int, int]:
    """(raw, raw / 2) for solutions with exactly two equal weights."""
    _guard(G)
    if table is None:
        table = build_frequency_table(G)
    raw = 0
    for w in table.weights:
        c = target - 2 * w
        if c == w or c not in table or table.freq[w] < 2:
            continue
        Xw = table.members[w]
        raw += triangle_count_assigned(slice_from_ids(G, Xw, Xw, table.members[c]), ledger)
    if raw % 2:
        raise CountingDefect(f"type-2 raw count {raw} is odd")
    return raw, raw // 2


def _third(target: Weight, rational: bool) -> Weight | None:
    if rational or isinstance(target, Fraction):
        return Fraction(target) / 3
    return target // 3 if target % 3 == 0 else None


def count_type3(
    G: WeightedGraph,
    target: Weight = 0,
    ledger: CostLedger | None = None,
    *,
    table: FrequencyTable | None = None,
) -> int:
    _guard(G)
    if table is None:
        table = build_frequency_table(G)
    w = _third(target, G.domain == "rational")
    if w is None or w not in table or table.freq[w] < 3:
        return 0
    return triangle_count_within(G, table.members[w], ledger)


def count(
    G: WeightedGraph,
    target: Weight = 0,
    ledger: CostLedger | None = None,
    *,
    threads: int = 1,
) -> CountBreakdown:
    """Number of unordered triangles with weight sum ``target``, by type."""
    _guard(G)
    if ledger is None:
        ledger = CostLedger()
    table = build_frequency_table(G)
    raw1, t1 = count_type1(G, target, ledger, threads=threads, table=table)
    raw2, t2 = count_type2(G, target, ledger, table=table)
    t3 = count_type3(G, target, ledger, table=table)
    return CountBreakdown(t1, t2, t3, raw1, raw2)


__all__ = [
    "CountingDefect",
    "uniform_slice_count",
    "count_type1",
    "count_type2",
    "count_type3",
    "count",
]
