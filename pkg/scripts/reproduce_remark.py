"""Check every claim about K[x1,x2,x3]/(x1^3, x2^3, x3^3, (x1+x2+x3)^3)."""

import argparse
import sys

from revgin.campaigns import RemarkConfig


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--samples", type=int, default=50)
    args = p.parse_args()

    report = RemarkConfig(seed=args.seed, trials=args.trials, samples=args.samples).run()
    for item in report["items"]:
        print(f"{'ok  ' if item['ok'] else 'FAIL'} {item['name']}")
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
