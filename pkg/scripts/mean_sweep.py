#!/usr/bin/env python3
"""Watch the prime-averaged period count approach its analytic limit.

Prints one row per checkpoint with the exact running mean and its
distance from the limit.  Decimal columns are for the eye only; the
underlying arithmetic is integer and fraction throughout.
"""

import argparse
import sys

from monodyn.mean_values import analytic_N, empirical_mean


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=1, help="exact period")
    ap.add_argument("--s", type=int, default=1, help="field degree p^s")
    ap.add_argument("--n", type=int, default=3, help="map exponent")
    ap.add_argument("--t", type=int, default=10**6, help="prime bound")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    limit = analytic_N(args.r, args.s, args.n)
    print(f"N(r={args.r}, s={args.s}, n={args.n}) = {limit}")
    rep = empirical_mean(args.r, args.s, args.n, args.t, workers=args.workers)
    print(f"{'t':>10}  {'primes':>8}  {'mean':>12}  {'error':>10}")
    for cp in rep.checkpoints:
        err = abs(cp.mean - limit)
        print(f"{cp.t:>10}  {cp.prime_count:>8}  {float(cp.mean):>12.6f}  "
              f"{float(err):>10.2e}")
    print(f"final mean {rep.checkpoints[-1].mean} "
          f"(= {float(rep.checkpoints[-1].mean):.8f})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
