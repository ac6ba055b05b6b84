"""Minimum-weight triangle via bit scaling over exact-target detection.

Weights are shifted into ``[0, 2W]`` and floor-divided by ``2**k``. Going
from level ``k + 1`` to level ``k`` every triangle's level sum doubles and
gains between 0 and 3, so the new minimum lies in a 4-value window and is the
first of ``2m, 2m + 1, 2m + 2, 2m + 3`` that ``detect`` accepts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from nwtri.bitlinalg import CostLedger, triangle_exists
from nwtri.detect import detect
from nwtri.graph import TriangleWitness, WeightedGraph, is_integral, max_abs_weight, slice_from_ids


class WindowViolation(AssertionError):
    """No candidate in the level window was feasible. Indicates a bug."""


@dataclass
class ScalingState:
    w_max: int
    levels: int
    level_mins: dict[int, int] = field(default_factory=dict)
    witness: TriangleWitness | None = None
    detect_calls: int = 0

    def check_window(self, k: int) -> None:
        lo = 2 * self.level_mins[k + 1]
        if not lo <= self.level_mins[k] <= lo + 3:
            raise WindowViolation(
                f"level {k} minimum {self.level_mins[k]} outside [{lo}, {lo + 3}]"
            )


@dataclass(frozen=True)
class MinResult:
    witness: TriangleWitness
    minimum: int
    detect_calls: int
    state: ScalingState

    @property
    def levels(self) -> int:
        return self.state.levels


def scale_levels(w_max: int) -> int:
    """Number of bits ``K`` with ``2 * w_max < 2**K`` (0 when ``w_max == 0``)."""
    return (2 * w_max).bit_length()


def call_budget(w_max: int) -> int:
    return 4 * (scale_levels(w_max) + 1) + 2


def scaled_graph(G: WeightedGraph, k: int, w_max: int | None = None) -> WeightedGraph:
    """Weights replaced by ``(wt + w_max) >> k``; edges untouched."""
    if not is_integral(G):
        raise TypeError("bit scaling needs integer weights")
    if k < 0:
        raise ValueError("bit index must be non-negative")
    if w_max is None:
        w_max = max_abs_weight(G)
    return G.with_weights([(w + w_max) >> k for w in G.weights])


def min_triangle(
    G: WeightedGraph,
    ledger: CostLedger | None = None,
    *,
    w_max: int | None = None,
    threads: int = 1,
) -> MinResult | None:
    """Triangle of least total weight, or None if ``G`` is triangle-free.

    ``w_max`` overrides the weight bound; it must cover every ``|wt(v)|``.
    """
    if not is_integral(G):
        raise TypeError("minimisation is defined for integer weights only")
    if ledger is None:
        ledger = CostLedger()
    actual = max_abs_weight(G)
    if w_max is None:
        w_max = actual
    elif w_max < actual:
        raise ValueError(f"w_max={w_max} is below the largest |weight| {actual}")

    K = scale_levels(w_max)
    state = ScalingState(w_max, K)

    state.detect_calls += 1
    ledger.counters["detect_calls"] += 1
    allv = list(range(G.n))
    probe = triangle_exists(slice_from_ids(G, allv, allv, allv), ledger)
    if not probe.found:
        return None
    x, y, z = probe.witness
    state.witness = TriangleWitness(x, y, z, G.weights[x] + G.weights[y] + G.weights[z])
    state.level_mins[K] = 0

    for k in range(K - 1, -1, -1):
        Gk = scaled_graph(G, k, w_max)
        base = 2 * state.level_mins[k + 1]
        for c in range(base, base + 4):
            state.detect_calls += 1
            hit = detect(Gk, c, ledger, threads=threads)
            if hit is not None:
                state.level_mins[k] = c
                state.witness = TriangleWitness(
                    hit.x, hit.y, hit.z, G.weights[hit.x] + G.weights[hit.y] + G.weights[hit.z]
                )
                break
        else:
            raise WindowViolation(f"no feasible level-{k} sum in [{base}, {base + 3}]")
        state.check_window(k)

    minimum = state.level_mins[0] - 3 * w_max
    assert state.witness.weight_sum == minimum, (state.witness, minimum)
    return MinResult(state.witness, minimum, state.detect_calls, state)


def max_triangle(G: WeightedGraph, ledger: CostLedger | None = None, **kw) -> MinResult | None:
    """Heaviest triangle by minimising the negated weights."""
    res = min_triangle(G.with_weights([-w for w in G.weights]), ledger, **kw)
    if res is None:
        return None
    w = res.witness
    return MinResult(
        TriangleWitness(w.x, w.y, w.z, -w.weight_sum), -res.minimum, res.detect_calls, res.state
    )


__all__ = [
    "ScalingState",
    "MinResult",
    "WindowViolation",
    "scale_levels",
    "call_budget",
    "scaled_graph",
    "min_triangle",
    "max_triangle",
]
