#!/usr/bin/env python3
"""Show the function-field counting ratio refusing to converge.

The fraction of primes of F_q(T) supporting an r-cycle swings between
two explicit limits forever; this prints the tail of the series with
each point's distance to the limit of its subsequence.
"""

import argparse
import sys

from monodyn.function_field import oscillation_experiment


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2, help="base field size")
    ap.add_argument("--r", type=int, default=3, help="cycle length")
    ap.add_argument("--t", type=int, default=40, help="largest degree")
    ap.add_argument("--rows", type=int, default=12, help="tail rows to print")
    args = ap.parse_args()

    rep = oscillation_experiment(args.q, args.r, args.t)
    print(f"ord of {args.q} mod {args.r} is {rep.l_r}; "
          f"limits {rep.limit_A} (A) and {rep.limit_B} (B)")
    print(f"{'t':>6}  {'ratio':>10}  {'tag':>3}  {'gap to own limit':>16}")
    for pt in rep.series[-args.rows:]:
        if "A" in pt.tag:
            gap = f"{float(abs(pt.ratio - rep.limit_A)):.2e}"
        elif "B" in pt.tag:
            gap = f"{float(abs(pt.ratio - rep.limit_B)):.2e}"
        else:
            gap = "-"
        print(f"{pt.t:>6}  {float(pt.ratio):>10.6f}  {pt.tag or '-':>3}  {gap:>16}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
