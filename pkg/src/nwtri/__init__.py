"""Node-weighted triangle detection, counting and minimisation in matrix-multiplication time."""

from nwtri.bitlinalg import BitMatrix, CostLedger, TripartiteSlice, bool_product
from nwtri.count import count
from nwtri.detect import build_frequency_table, detect, greedy_partition
from nwtri.graph import (
    CountBreakdown,
    TriangleWitness,
    WeightedGraph,
    generate_random,
    parse_graph,
    serialize_graph,
)
from nwtri.minimize import min_triangle
from nwtri.oracle import brute_count, brute_detect, brute_min
from nwtri.sparse import detect_sparse

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "CostLedger",
    "TripartiteSlice",
    "bool_product",
    "WeightedGraph",
    "TriangleWitness",
    "CountBreakdown",
    "generate_random",
    "parse_graph",
    "serialize_graph",
    "build_frequency_table",
    "greedy_partition",
    "detect",
    "count",
    "min_triangle",
    "detect_sparse",
    "brute_detect",
    "brute_count",
    "brute_min",
]
