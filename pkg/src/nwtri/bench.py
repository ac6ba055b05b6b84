"""Benchmark suites: JSON in, one CSV row per run out."""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from dataclasses import dataclass, field, fields
from typing import Sequence

from nwtri.bitlinalg import CostLedger
from nwtri.count import count
from nwtri.detect import detect
from nwtri.graph import generate_random, weight_to_json
from nwtri.minimize import call_budget, min_triangle
from nwtri.sparse import detect_sparse

MODES = ("detect", "count", "min", "sparse")

CSV_COLUMNS = [
    "n",
    "m",
    "mode",
    "wall_time_ns",
    "word_ops",
    "sum_XY_YZ_XZ",
    "detect_calls",
    "result",
    "dist",
    "p",
    "seed",
    "target",
    "w_max",
    "budget_ok",
]


@dataclass
class BenchCase:
    """One suite entry; list-valued ``n`` and ``seeds`` expand into a grid."""

    n: Sequence[int]
    p: float = 0.3
    dist: str = "uniform"
    low: int = -8
    high: int = 8
    mode: str = "detect"
    seeds: Sequence[int] = (0,)
    target: int | None = None
    delta: int | None = None
    exhaustive: bool = False

    def __post_init__(self):
        if isinstance(self.n, int):
            self.n = [self.n]
        if isinstance(self.seeds, int):
            self.seeds = [self.seeds]
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")

    def effective_target(self) -> int:
        if self.target is not None:
            return self.target
        # constant weights only ever produce the sum 3 * low
        return 3 * self.low if self.dist == "constant" else 0


@dataclass
class BenchSuite:
    cases: list[BenchCase] = field(default_factory=list)

    @classmethod
    def from_json(cls, text: str) -> "BenchSuite":
        doc = json.loads(text)
        entries = doc["runs"] if isinstance(doc, dict) else doc
        known = {f.name for f in fields(BenchCase)}
        cases = []
        for e in entries:
            extra = set(e) - known
            if extra:
                raise ValueError(f"unknown suite keys: {sorted(extra)}")
            cases.append(BenchCase(**e))
        return cls(cases)


def run_case(case: BenchCase, n: int, seed: int, timing: bool = True, threads: int = 1) -> dict:
    G = generate_random(n, case.p, case.low, case.high, seed, case.dist)
    target = case.effective_target()
    ledger = CostLedger()
    w_max = max(abs(case.low), abs(case.high))
    t0 = time.perf_counter_ns()
    budget_ok = True
    if case.mode == "detect":
        hit = detect(G, target, ledger, exhaustive=case.exhaustive, threads=threads)
        result = "found" if hit else "none"
        budget_ok = ledger.slice_size_sum() <= 10 * n * n and all(
            sum(p.z_sizes) <= n for p in ledger.pivots
        )
    elif case.mode == "count":
        result = str(count(G, target, ledger, threads=threads).total)
        budget_ok = ledger.slice_size_sum() <= 10 * n * n
    elif case.mode == "min":
        res = min_triangle(G, ledger, w_max=w_max, threads=threads)
        result = "none" if res is None else str(weight_to_json(res.minimum))
        budget_ok = ledger.counters["detect_calls"] <= call_budget(w_max)
    else:
        hit = detect_sparse(G, target, case.delta, ledger, threads=threads)
        result = "found" if hit else "none"
    elapsed = time.perf_counter_ns() - t0 if timing else 0
    return {
        "n": n,
        "m": G.m,
        "mode": case.mode,
        "wall_time_ns": elapsed,
        "word_ops": ledger.word_ops,
        "sum_XY_YZ_XZ": ledger.slice_size_sum(),
        "detect_calls": ledger.counters["detect_calls"],
        "result": result,
        "dist": case.dist,
        "p": case.p,
        "seed": seed,
        "target": target,
        "w_max": w_max,
        "budget_ok": int(budget_ok),
    }


def run_suite(suite: BenchSuite, timing: bool = True, threads: int = 1) -> list[dict]:
    rows = []
    for case in suite.cases:
        for n, seed in itertools.product(case.n, case.seeds):
            rows.append(run_case(case, n, seed, timing, threads))
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
