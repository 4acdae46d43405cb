"""Sweep Borel-fixed ideals: does A (x) K[y]/(y^2) have the SLP exactly when
h_A satisfies C1 and C2?"""

import argparse
import sys
import time

from revgin.campaigns import SweepConfig


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[2, 3])
    p.add_argument("--max-socle", type=int, default=5)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=5)
    args = p.parse_args()

    failed = False
    for n in args.n:
        start = time.perf_counter()
        r = SweepConfig(n=n, max_socle=args.max_socle, seed=args.seed, trials=args.trials).run()
        print(
            f"n={n} socle<={args.max_socle}: {r['ideals']} Borel-fixed ideals, "
            f"{r['compared']} with x_n Lefschetz, agree {r['agree']}/{r['compared']} "
            f"(SLP {r['counts']['slp']}, no SLP {r['counts']['no_slp']}) "
            f"in {time.perf_counter() - start:.1f}s"
        )
        for m in r["mismatches"]:
            print("  mismatch:", m)
        failed |= bool(r["mismatches"])
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
