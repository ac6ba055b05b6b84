"""Word-packed Boolean matrices and unweighted tripartite triangle primitives.

Every matrix operation in the package goes through this module. Rows are
packed little-endian into ``uint64`` words: column ``j`` of a row lives in
word ``j // 64`` at bit ``j % 64``. Padding bits past ``cols`` are always 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

WORD_BITS = 64
TILE_ROWS = 256
# |X|*|Y|*|Z| bound keeping assigned counts inside a signed 64-bit accumulator
COUNT_LIMIT = 2**63 - 1


def words_for(cols: int) -> int:
    return -(-cols // WORD_BITS)


class BitMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        self.rows = rows
        self.cols = cols
        stride = words_for(cols)
        if data is None:
            data = np.zeros((rows, stride), dtype=np.uint64)
        if data.shape != (rows, stride) or data.dtype != np.uint64:
            raise ValueError(f"data shape {data.shape} does not match {rows}x{cols}")
        self.data = data

    @property
    def stride(self) -> int:
        return self.data.shape[1]

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_bool(np.eye(n, dtype=bool))

    @classmethod
    def from_bool(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=bool)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        rows, cols = arr.shape
        stride = words_for(cols)
        if rows == 0 or stride == 0:
            return cls(rows, cols)
        padded = np.zeros((rows, stride * WORD_BITS), dtype=bool)
        padded[:, :cols] = arr
        packed = np.packbits(padded, axis=1, bitorder="little")
        return cls(rows, cols, np.ascontiguousarray(packed).view("<u8").astype(np.uint64))

    def to_bool(self) -> np.ndarray:
        if self.rows == 0 or self.stride == 0:
            return np.zeros((self.rows, self.cols), dtype=bool)
        raw = np.ascontiguousarray(self.data).view(np.uint8)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self.cols].astype(bool)

    def get(self, i: int, j: int) -> bool:
        return bool((int(self.data[i, j // WORD_BITS]) >> (j % WORD_BITS)) & 1)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_bool(self.to_bool().T)

    def popcount(self) -> int:
        return int(np.bitwise_count(self.data).sum())

    def padding_clean(self) -> bool:
        tail = self.cols % WORD_BITS
        if tail == 0 or self.rows == 0:
            return True
        mask = np.uint64(~((1 << tail) - 1) & (2**64 - 1))
        return not np.any(self.data[:, -1] & mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and np.array_equal(
            self.data, other.data
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, ones={self.popcount()})"


@dataclass(frozen=True)
class CallRecord:
    kind: str  # "product" or "slice"
    x: int
    y: int
    z: int
    word_ops: int


@dataclass(frozen=True)
class PivotRecord:
    pivot: object
    pivot_freq: int
    part_freqs: tuple[int, ...]
    z_sizes: tuple[int, ...]


@dataclass
class CostLedger:
    """Instrumentation for matrix-level work.

    ``calls`` holds one record per Boolean product and per slice primitive;
    ``pivots`` holds the per-pivot partition shape of each frequency-partition
    pass; ``counters`` holds free-form event counts (detect calls, enumerated
    pairs, ...).
    """

    calls: list[CallRecord] = field(default_factory=list)
    pivots: list[PivotRecord] = field(default_factory=list)
    counters: Counter = field(default_factory=Counter)

    def record(self, kind: str, x: int, y: int, z: int, word_ops: int) -> None:
        self.calls.append(CallRecord(kind, x, y, z, word_ops))

    def merge(self, other: "CostLedger") -> None:
        self.calls.extend(other.calls)
        self.pivots.extend(other.pivots)
        self.counters.update(other.counters)

    @property
    def word_ops(self) -> int:
        return sum(c.word_ops for c in self.calls)

    @property
    def slice_calls(self) -> list[CallRecord]:
        return [c for c in self.calls if c.kind == "slice"]

    def slice_size_sum(self) -> int:
        """Sum of |X||Y| + |Y||Z| + |X||Z| over slice primitives."""
        return sum(c.x * c.y + c.y * c.z + c.x * c.z for c in self.slice_calls)

    def totals(self) -> dict:
        return {
            "calls": len(self.calls),
            "slice_calls": len(self.slice_calls),
            "word_ops": self.word_ops,
            "sum_XY_YZ_XZ": self.slice_size_sum(),
            **dict(self.counters),
        }


def _null_ledger(ledger: CostLedger | None) -> CostLedger:
    return CostLedger() if ledger is None else ledger


def column_blocks(stride: int, rows: int) -> list[tuple[int, int]]:
    """Word ranges splitting a wide right operand into blocks about ``rows`` wide.

    Block width is ``rows`` rounded down to whole words, never below one word.
    """
    width = max(1, rows // WORD_BITS)
    return [(s, min(s + width, stride)) for s in range(0, stride, width)]


def bool_product(A: BitMatrix, B: BitMatrix, ledger: CostLedger | None = None) -> BitMatrix:
    """Boolean product ``C[i, j] = OR_t A[i, t] AND B[t, j]``.

    Row-OR kernel: every set bit ``A[i, t]`` ORs row ``t`` of ``B`` into row
    ``i`` of ``C``. When ``B`` is wider than ``A`` is tall, ``B`` is cut into
    column blocks that are multiplied one after another.
    """
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    ledger = _null_ledger(ledger)
    r, k, c = A.rows, A.cols, B.cols
    C = BitMatrix.zeros(r, c)
    if r == 0 or c == 0:
        return C

    if c > r:
        blocks = column_blocks(B.stride, r)
    else:
        blocks = [(0, B.stride)]
    a_stride = A.stride
    Bd, Cd = B.data, C.data
    for w0, w1 in blocks:
        ops = 0
        for t0 in range(0, r, TILE_ROWS):
            tile = A.data[t0 : t0 + TILE_ROWS]
            bits = BitMatrix(tile.shape[0], k, tile).to_bool()
            ops += tile.shape[0] * a_stride
            for i, row in enumerate(bits):
                nz = np.flatnonzero(row)
                if nz.size == 0:
                    continue
                ops += nz.size * (w1 - w0)
                if nz.size == 1:
                    Cd[t0 + i, w0:w1] = Bd[nz[0], w0:w1]
                else:
                    Cd[t0 + i, w0:w1] = np.bitwise_or.reduce(Bd[nz, w0:w1], axis=0)
        ledger.record("product", r, k, min((w1 - w0) * WORD_BITS, c - w0 * WORD_BITS), ops)
    return C


@dataclass(frozen=True)
class SliceDecision:
    found: bool
    witness: tuple[int, int, int] | None = None


class TripartiteSlice:
    """Vertex lists ``X, Y, Z`` plus the cross adjacencies between them.

    Lists may overlap; triangle primitives treat the three roles as distinct
    copies, so only the cross relations matter.
    """

    __slots__ = ("x_ids", "y_ids", "z_ids", "adj_xy", "adj_yz", "adj_xz")

    def __init__(self, x_ids, y_ids, z_ids, adj_xy: BitMatrix, adj_yz: BitMatrix, adj_xz: BitMatrix):
        self.x_ids = np.asarray(x_ids, dtype=np.int64)
        self.y_ids = np.asarray(y_ids, dtype=np.int64)
        self.z_ids = np.asarray(z_ids, dtype=np.int64)
        nx, ny, nz = len(self.x_ids), len(self.y_ids), len(self.z_ids)
        if (adj_xy.rows, adj_xy.cols) != (nx, ny):
            raise ValueError("adj_xy shape mismatch")
        if (adj_yz.rows, adj_yz.cols) != (ny, nz):
            raise ValueError("adj_yz shape mismatch")
        if (adj_xz.rows, adj_xz.cols) != (nx, nz):
            raise ValueError("adj_xz shape mismatch")
        self.adj_xy, self.adj_yz, self.adj_xz = adj_xy, adj_yz, adj_xz

    @classmethod
    def from_adjacency(cls, adjacency: np.ndarray, X, Y, Z, yz_mask: np.ndarray | None = None):
        """Restrict a dense adjacency to ``X x Y``, ``Y x Z``, ``X x Z``.

        ``yz_mask`` (shape ``|Y| x |Z|``) further filters the Y-Z relation.
        """
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        Z = np.asarray(Z, dtype=np.int64)
        yz = adjacency[np.ix_(Y, Z)]
        if yz_mask is not None:
            yz = yz & yz_mask
        return cls(
            X,
            Y,
            Z,
            BitMatrix.from_bool(adjacency[np.ix_(X, Y)]),
            BitMatrix.from_bool(yz),
            BitMatrix.from_bool(adjacency[np.ix_(X, Z)]),
        )

    @property
    def shape(self) -> tuple[int, int, int]:
        return (len(self.x_ids), len(self.y_ids), len(self.z_ids))

    def __repr__(self) -> str:
        return "TripartiteSlice(|X|={}, |Y|={}, |Z|={})".format(*self.shape)


def _lowest_bit(word: int) -> int:
    return (word & -word).bit_length() - 1


def triangle_exists(sl: TripartiteSlice, ledger: CostLedger | None = None) -> SliceDecision:
    """Is there ``(x, y, z)`` in ``X x Y x Z`` with all three cross edges?

    The witness is the first hit scanning X ascending, then Z, then Y, and is
    reported in source-graph ids.
    """
    ledger = _null_ledger(ledger)
    nx, ny, nz = sl.shape
    if nx == 0 or ny == 0 or nz == 0:
        ledger.record("slice", nx, ny, nz, 0)
        return SliceDecision(False)

    P = bool_product(sl.adj_xy, sl.adj_yz, ledger)
    H = P.data & sl.adj_xz.data
    ops = H.size
    hit_rows = np.flatnonzero(H.any(axis=1))
    if hit_rows.size == 0:
        ledger.record("slice", nx, ny, nz, ops)
        return SliceDecision(False)

    i = int(hit_rows[0])
    wi = int(np.flatnonzero(H[i])[0])
    j = wi * WORD_BITS + _lowest_bit(int(H[i, wi]))
    col = BitMatrix.from_bool(sl.adj_yz.to_bool()[:, j][None, :])
    common = sl.adj_xy.data[i] & col.data[0]
    ops += 2 * common.size
    wk = int(np.flatnonzero(common)[0])
    k = wk * WORD_BITS + _lowest_bit(int(common[wk]))
    ledger.record("slice", nx, ny, nz, ops)
    return SliceDecision(True, (int(sl.x_ids[i]), int(sl.y_ids[k]), int(sl.z_ids[j])))


_PAIR_CHUNK = 1 << 16


def triangle_count_assigned(sl: TripartiteSlice, ledger: CostLedger | None = None) -> int:
    """Number of role-assigned triples ``(x, y, z)`` with all three cross edges.

    Sums ``popcount(row_Y(x) & row_Y(z))`` over the ``(x, z)`` pairs joined in
    ``adj_xz``. A vertex occurring in several roles is counted once per role.
    """
    ledger = _null_ledger(ledger)
    nx, ny, nz = sl.shape
    if nx * ny * nz > COUNT_LIMIT:
        raise OverflowError(f"slice {sl.shape} may overflow a 64-bit triangle count")
    if nx == 0 or ny == 0 or nz == 0:
        ledger.record("slice", nx, ny, nz, 0)
        return 0
    zy = sl.adj_yz.transpose()
    xi, zi = np.nonzero(sl.adj_xz.to_bool())
    total = 0
    for s in range(0, xi.size, _PAIR_CHUNK):
        a = sl.adj_xy.data[xi[s : s + _PAIR_CHUNK]]
        b = zy.data[zi[s : s + _PAIR_CHUNK]]
        total += int(np.bitwise_count(a & b).sum(dtype=np.int64))
    ledger.record("slice", nx, ny, nz, 2 * xi.size * sl.adj_xy.stride)
    return total


def triangle_count_within(G, S: Sequence[int], ledger: CostLedger | None = None) -> int:
    """Unordered triangles with all three vertices in ``S``."""
    S = sorted(set(S))
    sl = TripartiteSlice.from_adjacency(G.adjacency, S, S, S)
    assigned = triangle_count_assigned(sl, ledger)
    assert assigned % 6 == 0, f"assigned count {assigned} not divisible by 6"
    return assigned // 6


__all__ = [
    "WORD_BITS",
    "BitMatrix",
    "CostLedger",
    "CallRecord",
    "PivotRecord",
    "SliceDecision",
    "TripartiteSlice",
    "bool_product",
    "column_blocks",
    "triangle_exists",
    "triangle_count_assigned",
    "triangle_count_within",
]
