"""Worst-case ledger totals of the pivot loop against the 10 n^2 size budget.

Runs exhaustive detection (no early exit) and prints, per instance, the total
slice size relative to n^2, the largest per-pivot Z total relative to n, and
the number of parts the partition needed for the most frequent pivot.
"""

import argparse
import time

from nwtri.bitlinalg import CostLedger
from nwtri.detect import detect
from nwtri.graph import DISTRIBUTIONS, generate_random


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[100, 500, 1000, 2000])
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--low", type=int, default=-8)
    ap.add_argument("--high", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>6} {'dist':>9} {'size/n^2':>9} {'maxZ/n':>7} {'pivots':>7} {'slices':>7} {'sec':>6}")
    for n in args.n:
        for dist in DISTRIBUTIONS:
            G = generate_random(n, args.p, args.low, args.high, args.seed, dist)
            target = 3 * args.low if dist == "constant" else 0
            ledger = CostLedger()
            t0 = time.perf_counter()
            detect(G, target, ledger, exhaustive=True)
            dt = time.perf_counter() - t0
            maxz = max((sum(r.z_sizes) for r in ledger.pivots), default=0)
            print(
                f"{n:>6} {dist:>9} {ledger.slice_size_sum() / n**2:>9.2f} {maxz / n:>7.2f} "
                f"{len(ledger.pivots):>7} {len(ledger.slice_calls):>7} {dt:>6.2f}"
            )


if __name__ == "__main__":
    main()
