"""Detect calls used by bit-scaling minimisation as the weight bound grows."""

import argparse

from nwtri.graph import generate_random
from nwtri.minimize import call_budget, min_triangle, scale_levels
from nwtri.oracle import brute_min


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--check", action="store_true", help="compare against brute force")
    args = ap.parse_args()

    print(f"{'w_max':>6} {'K':>3} {'budget':>6} {'max calls':>9} {'mean calls':>10}")
    for w_max in (1, 2, 8, 64, 1024, 2**20):
        calls = []
        for seed in range(args.trials):
            G = generate_random(args.n, args.p, -w_max, w_max, seed)
            res = min_triangle(G, w_max=w_max)
            if res is None:
                continue
            if args.check:
                assert res.minimum == brute_min(G)[1]
            calls.append(res.detect_calls)
        mean = sum(calls) / len(calls) if calls else 0
        print(f"{w_max:>6} {scale_levels(w_max):>3} {call_budget(w_max):>6} "
              f"{max(calls, default=0):>9} {mean:>10.1f}")


if __name__ == "__main__":
    main()
