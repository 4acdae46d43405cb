"""Compare gin with the almost revlex ideal for (a,b,c,2) complete intersections.

    python3 scripts/verify_theorem.py --max-exponent 4 --jobs 4
"""

import argparse
import json
import sys

from revgin.campaigns import TheoremConfig, render_table


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-exponent", type=int, default=4)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="also write the full report here")
    args = p.parse_args()

    config = TheoremConfig(
        max_exponent=args.max_exponent, seed=args.seed, trials=args.trials, jobs=args.jobs, timings=True
    )
    report = config.run()
    print(render_table(report))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2)
    return 0 if report["summary"]["failed"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
