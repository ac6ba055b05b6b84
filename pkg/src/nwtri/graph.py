"""Vertex-weighted simple graphs: data model, validation, generation and I/O.

Weights live in an exact, totally ordered additive group. Two instantiations
are supported: Python ``int`` restricted to the signed 64-bit range, and
``fractions.Fraction``. Floats are rejected everywhere because the algorithms
rely on exact equality of weight sums.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence, TextIO, Union

import numpy as np

from nwtri.bitlinalg import TripartiteSlice

Weight = Union[int, Fraction]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_INT_RE = re.compile(r"^[+-]?\d+$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+/\d+$")


class GraphFormatError(ValueError):
    """Malformed graph text. ``line`` is the 1-based physical line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def check_weight(w: object) -> Weight:
    if isinstance(w, bool) or not isinstance(w, (int, Fraction)):
        raise TypeError(
            f"weights must be int or Fraction, got {type(w).__name__} ({w!r})"
        )
    if isinstance(w, int) and not INT64_MIN <= w <= INT64_MAX:
        raise OverflowError(f"integer weight {w} does not fit in 64 bits")
    return w


def parse_weight(token: str) -> Weight:
    """Parse ``"17"``, ``"-3"`` or ``"5/7"``. Anything float-like is refused."""
    token = token.strip()
    if _INT_RE.match(token):
        return check_weight(int(token))
    if _RATIONAL_RE.match(token):
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in weight {token!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"not an exact integer or rational weight: {token!r}")


def format_weight(w: Weight) -> str:
    if isinstance(w, Fraction):
        return f"{w.numerator}/{w.denominator}"
    return str(w)


def weight_to_json(w: Weight) -> int | str:
    """Integers stay JSON numbers; non-integral rationals become ``"p/q"``."""
    if isinstance(w, Fraction):
        return w.numerator if w.denominator == 1 else format_weight(w)
    return w


@dataclass(frozen=True)
class TriangleWitness:
    x: int
    y: int
    z: int
    weight_sum: Weight

    @property
    def ids(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def validate(self, G: "WeightedGraph", target: Weight | None = None) -> None:
        """Raise AssertionError unless this is a real triangle of ``G``."""
        x, y, z = self.ids
        assert len({x, y, z}) == 3, f"repeated vertex in {self.ids}"
        for u, v in ((x, y), (y, z), (x, z)):
            assert G.has_edge(u, v), f"missing edge {u}-{v} in witness {self.ids}"
        s = G.weights[x] + G.weights[y] + G.weights[z]
        assert s == self.weight_sum, f"witness sum {self.weight_sum} != {s}"
        if target is not None:
            assert s == target, f"witness sum {s} != target {target}"


@dataclass(frozen=True)
class CountBreakdown:
    """Solutions split by weight multiset: all distinct / exactly two equal / all equal."""

    type1: int
    type2: int
    type3: int
    raw_type1: int = 0
    raw_type2: int = 0

    @property
    def total(self) -> int:
        return self.type1 + self.type2 + self.type3

    def as_dict(self) -> dict:
        return {
            "type1": self.type1,
            "type2": self.type2,
            "type3": self.type3,
            "total": self.total,
            "raw_type1": self.raw_type1,
            "raw_type2": self.raw_type2,
        }


class WeightedGraph:
    """Simple undirected graph on vertices ``0..n-1`` with one weight per vertex.

    Instances are treated as immutable; derived structures (neighbour sets,
    dense adjacency) are computed lazily and cached.
    """

    def __init__(self, weights: Sequence[Weight], edges: Iterable[tuple[int, int]]):
        self.weights: tuple[Weight, ...] = tuple(check_weight(w) for w in weights)
        n = len(self.weights)
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        self.edges: frozenset[tuple[int, int]] = frozenset(canon)

    @classmethod
    def _trusted(cls, weights: tuple, edges: frozenset) -> "WeightedGraph":
        G = cls.__new__(cls)
        G.weights = weights
        G.edges = edges
        return G

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def domain(self) -> str:
        """``"int"`` or ``"rational"``."""
        if any(isinstance(w, Fraction) for w in self.weights):
            return "rational"
        return "int"

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as a sorted ``(m, 2)`` int64 array with ``u < v``."""
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.array(sorted(self.edges), dtype=np.int64)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense symmetric boolean adjacency matrix."""
        A = np.zeros((self.n, self.n), dtype=bool)
        e = self.edge_array
        A[e[:, 0], e[:, 1]] = True
        A[e[:, 1], e[:, 0]] = True
        return A

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def with_weights(self, weights: Sequence[Weight]) -> "WeightedGraph":
        """Same edge set, new weights. Shares the cached adjacency structures."""
        if len(weights) != self.n:
            raise ValueError(f"expected {self.n} weights, got {len(weights)}")
        G = WeightedGraph._trusted(tuple(check_weight(w) for w in weights), self.edges)
        for name in ("neighbors", "edge_array", "adjacency"):
            if name in self.__dict__:
                G.__dict__[name] = self.__dict__[name]
        return G

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.weights == other.weights and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.weights, self.edges))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m}, domain={self.domain})"


# -- text format --------------------------------------------------------------


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        out.append((lineno, s.split()))
    return out


def parse_graph(text: str | TextIO) -> WeightedGraph:
    """Parse the whitespace-delimited graph format.

    Layout: ``n m`` header, then ``n`` lines ``label weight``, then ``m``
    lines ``u v``. Lines starting with ``#`` are comments. If the labels are
    exactly the integers ``0..n-1`` they are used as ids; otherwise ids are
    assigned in order of appearance. A JSON document (``{"weights": [...],
    "edges": [...]}``) is accepted as well.
    """
    if not isinstance(text, str):
        text = text.read()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)

    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty input: missing 'n m' header", 1)
    lineno, head = lines[0]
    if len(head) != 2 or not all(_INT_RE.match(t) for t in head):
        raise GraphFormatError(f"malformed header {' '.join(head)!r}, expected 'n m'", lineno)
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count", lineno)
    if len(lines) - 1 < n + m:
        last = lines[-1][0]
        raise GraphFormatError(
            f"expected {n} vertex lines and {m} edge lines, found {len(lines) - 1} lines", last
        )
    if len(lines) - 1 > n + m:
        raise GraphFormatError("unexpected extra line after the edge list", lines[n + m + 1][0])

    labels: list[str] = []
    weights: list[Weight] = []
    seen: dict[str, int] = {}
    for lineno, toks in lines[1 : n + 1]:
        if len(toks) != 2:
            raise GraphFormatError("vertex line must be 'vertex_id weight'", lineno)
        label, wtok = toks
        if label in seen:
            raise GraphFormatError(f"duplicate vertex id {label!r}", lineno)
        try:
            w = parse_weight(wtok)
        except (ValueError, OverflowError) as exc:
            raise GraphFormatError(str(exc), lineno) from None
        seen[label] = len(labels)
        labels.append(label)
        weights.append(w)

    if all(_INT_RE.match(s) for s in labels) and {int(s) for s in labels} == set(range(n)):
        ids = {s: int(s) for s in labels}
        ordered = [None] * n
        for s, w in zip(labels, weights):
            ordered[int(s)] = w
        weights = ordered
    else:
        ids = seen

    edges: set[tuple[int, int]] = set()
    for lineno, toks in lines[n + 1 :]:
        if len(toks) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        a, b = toks
        for t in (a, b):
            if t not in ids:
                raise GraphFormatError(f"edge endpoint {t!r} is not a declared vertex", lineno)
        u, v = ids[a], ids[b]
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise GraphFormatError(f"duplicate edge {a} {b}", lineno)
        edges.add(e)
    return WeightedGraph._trusted(tuple(weights), frozenset(edges))


def serialize_graph(G: WeightedGraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{v} {format_weight(w)}" for v, w in enumerate(G.weights)]
    lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def graph_to_json(G: WeightedGraph) -> str:
    doc = {
        "n": G.n,
        "weights": [weight_to_json(w) for w in G.weights],
        "edges": [list(e) for e in sorted(G.edges)],
    }
    return json.dumps(doc, separators=(",", ":"))


def graph_from_json(text: str) -> WeightedGraph:
    try:
        doc = json.loads(text)
        raw = doc["weights"]
        edges = [tuple(e) for e in doc["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from None
    weights = []
    for w in raw:
        if isinstance(w, str):
            w = parse_weight(w)
        elif isinstance(w, float):
            raise GraphFormatError(f"floating-point weight {w!r} is not supported")
        weights.append(w)
    try:
        return WeightedGraph(weights, edges)
    except (ValueError, TypeError, OverflowError) as exc:
        raise GraphFormatError(str(exc)) from None


# -- generation ---------------------------------------------------------------

DISTRIBUTIONS = ("uniform", "zipf", "constant")


def zipf_probabilities(size: int, s: float = 1.0) -> np.ndarray:
    ranks = np.arange(1, size + 1, dtype=np.float64)
    p = ranks**-s
    return p / p.sum()


def generate_random(
    n: int,
    p: float,
    weight_low: int = -8,
    weight_high: int = 8,
    seed: int = 0,
    distribution: str = "uniform",
) -> WeightedGraph:
    """Erdős–Rényi graph with integer weights.

    ``uniform`` draws from ``[weight_low, weight_high]``; ``zipf`` gives the
    k-th value of that range probability proportional to ``1/k``; ``constant``
    sets every weight to ``weight_low``. Output depends only on the arguments.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if weight_low > weight_high:
        raise ValueError("weight_low must not exceed weight_high")
    if distribution not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {distribution!r}; choose from {DISTRIBUTIONS}")
    check_weight(weight_low)
    check_weight(weight_high)
    rng = np.random.default_rng(np.uint64(seed % 2**64))

    us, vs = [], []
    for u in range(n - 1):
        row = np.flatnonzero(rng.random(n - u - 1) < p) + (u + 1)
        us.append(np.full(row.size, u, dtype=np.int64))
        vs.append(row)
    if us:
        eu, ev = np.concatenate(us), np.concatenate(vs)
    else:
        eu = ev = np.zeros(0, dtype=np.int64)

    span = weight_high - weight_low + 1
    if distribution == "constant":
        weights = [weight_low] * n
    elif distribution == "uniform":
        offs = rng.integers(0, span, size=n, dtype=np.uint64) if n else []
        weights = [weight_low + int(o) for o in offs]
    else:
        offs = rng.choice(span, size=n, p=zipf_probabilities(span)) if n else []
        weights = [weight_low + int(o) for o in offs]

    G = WeightedGraph._trusted(
        tuple(weights), frozenset(zip(eu.tolist(), ev.tolist()))
    )
    G.__dict__["edge_array"] = np.stack([eu, ev], axis=1) if eu.size else np.zeros((0, 2), np.int64)
    return G


# -- derived views ------------------------------------------------------------


def build_slice(
    G: WeightedGraph,
    x_pred: Callable[[int], bool],
    y_pred: Callable[[int], bool],
    z_pred: Callable[[int], bool],
) -> TripartiteSlice:
    """Tripartite view whose parts are the predicate images, in ascending id order."""
    X = [v for v in range(G.n) if x_pred(v)]
    Y = [v for v in range(G.n) if y_pred(v)]
    Z = [v for v in range(G.n) if z_pred(v)]
    return TripartiteSlice.from_adjacency(G.adjacency, X, Y, Z)


def slice_from_ids(G: WeightedGraph, X, Y, Z) -> TripartiteSlice:
    return TripartiteSlice.from_adjacency(G.adjacency, X, Y, Z)


def induced_subgraph(G: WeightedGraph, S: Iterable[int]) -> tuple[WeightedGraph, dict[int, int]]:
    """Subgraph on ``S``; returns it with the old-id -> new-id map (ascending order kept)."""
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} not in graph")
    remap = {old: new for new, old in enumerate(keep)}
    edges = frozenset(
        (remap[u], remap[v]) for u, v in G.edges if u in remap and v in remap
    )
    return WeightedGraph._trusted(tuple(G.weights[v] for v in keep), edges), remap


def max_abs_weight(G: WeightedGraph) -> Weight:
    return max((abs(w) for w in G.weights), default=0)


def is_integral(G: WeightedGraph) -> bool:
    return all(isinstance(w, int) for w in G.weights)


__all__ = [
    "Weight",
    "WeightedGraph",
    "TriangleWitness",
    "CountBreakdown",
    "GraphFormatError",
    "parse_graph",
    "parse_weight",
    "format_weight",
    "serialize_graph",
    "graph_to_json",
    "graph_from_json",
    "generate_random",
    "build_slice",
    "slice_from_ids",
    "induced_subgraph",
    "DISTRIBUTIONS",
]
