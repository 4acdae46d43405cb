"""Smallest discrete slope of the first difference of three-variable
complete intersection h-vectors."""

import argparse
import itertools

from revgin.hvector import ci_hilbert, difference, slope_profile


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-exponent", type=int, default=6)
    args = p.parse_args()

    worst = 0
    for a, b, c in itertools.combinations_with_replacement(range(1, args.max_exponent + 1), 3):
        h1 = difference(ci_hilbert([a, b, c]))
        s = slope_profile(h1).min_slope
        if s is not None:
            worst = min(worst, s)
        print(f"{a},{b},{c}  dh={list(h1)}  min slope={s}")
    print(f"overall minimum: {worst}")


if __name__ == "__main__":
    main()
