"""Command line front end.

Exit codes: 0 success, 1 failed reproduction check, 2 domain or input error,
3 unstable gin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import campaigns
from .borel import almost_revlex_ideal
from .errors import RevginError, UnstableGinError
from .gin import compute_gin
from .groebner import IdealGens, MonomialIdeal, complete_intersection, quotient_of
from .hvector import check_c1, check_c2, check_c3, ci_hilbert, k_difference
from .lefschetz import find_slp_witness, has_k_slp, jordan_type, slp_from_basic_invariants
from .poly import LinearForm

SEED_ENV = "REVGIN_SEED"


class InputError(RevginError):
    pass


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "7"))


def int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def load_ideal(source: str) -> IdealGens | MonomialIdeal:
    """Parse ``ci:a,b,...`` or read a JSON file holding a monomial ideal
    (``{"n", "gens"}``) or polynomial generators (``{"n", "polys"}``)."""
    if source.startswith("ci:"):
        return complete_intersection(int_list(source[3:]))
    try:
        with open(source) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}")
    if not isinstance(data, dict) or "n" not in data:
        raise InputError(f"{source}: expected an object with key 'n'")
    try:
        if "gens" in data:
            return MonomialIdeal.from_json(data)
        if "polys" in data:
            return IdealGens.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{source}: bad ideal description: {exc}")
    raise InputError(f"{source}: expected key 'gens' or 'polys'")


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def emit(obj, out=None):
    text = dumps(obj)
    print(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def cmd_hilbert(args):
    h = ci_hilbert(args.ci)
    rows = []
    for k in range(3):
        hk = k_difference(h, k)
        rows.append({"k": k, "h": list(hk), "c1": check_c1(hk), "c2": check_c2(hk), "c3": check_c3(hk)})
    emit({"h": list(h), "differences": rows})


def cmd_almost_revlex(args):
    emit(almost_revlex_ideal(args.h, args.n).to_json())


def cmd_gin(args):
    cert = compute_gin(load_ideal(args.ideal), trials=args.trials, seed=args.seed, bound=args.bound)
    emit(cert.to_json())


def cmd_check_slp(args):
    Q = quotient_of(load_ideal(args.ideal))
    if args.k == 1:
        verdict = find_slp_witness(Q, trials=args.trials, seed=args.seed, bound=args.bound)
    else:
        verdict = has_k_slp(Q, args.k, trials=args.trials, seed=args.seed, bound=args.bound)
    out = verdict.to_json()
    out["k"] = args.k
    emit(out)


def cmd_jordan(args):
    Q = quotient_of(load_ideal(args.ideal))
    g = LinearForm(tuple(Fraction(c) for c in args.g))
    if g.n != Q.n:
        raise InputError(f"--g has {g.n} coefficients, the ring has {Q.n} variables")
    inv = jordan_type(Q, g)
    out = inv.to_json()
    out["hilbert_series"] = list(inv.hilbert_series())
    out["quotient_series"] = list(inv.quotient_series())
    out["slp"] = slp_from_basic_invariants(inv)
    emit(out)


def cmd_verify_theorem(args):
    config = campaigns.TheoremConfig(
        max_exponent=args.max_exponent,
        seed=args.seed,
        trials=args.trials,
        bound=args.bound,
        kslp_trials=args.kslp_trials,
        jobs=args.jobs,
        timings=args.timings,
    )
    report = config.run()
    if args.table:
        print(campaigns.render_table(report))
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(dumps(report) + "\n")
    else:
        emit(report, args.out)
    return 0 if report["summary"]["failed"] == 0 else 1


def cmd_reproduce_remark(args):
    report = campaigns.RemarkConfig(seed=args.seed, trials=args.trials).run()
    emit(report, args.out)
    if not report["ok"]:
        failing = [item["name"] for item in report["items"] if not item["ok"]]
        print("FAILED: " + "; ".join(failing), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revgin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    seed = default_seed()

    s = sub.add_parser("hilbert", help="h-vector of a monomial complete intersection")
    s.add_argument("--ci", type=int_list, required=True)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("almost-revlex", help="almost revlex ideal of an h-vector")
    s.add_argument("--h", type=int_list, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_almost_revlex)

    s = sub.add_parser("gin", help="certified generic initial ideal")
    s.add_argument("--ideal", required=True, help="JSON file or ci:a,b,...")
    s.add_argument("--trials", type=int, default=3)
    s.add_argument("--seed", type=int, default=seed)
    s.add_argument("--bound", type=int, default=100)
    s.set_defaults(func=cmd_gin)

    for name, k in (("check-slp", 1), ("check-kslp", 2)):
        s = sub.add_parser(name, help="search for a (k-)SLP witness chain")
        s.add_argument("--ideal", required=True)
        s.add_argument("--k", type=int, default=k)
        s.add_argument("--trials", type=int, default=20)
        s.add_argument("--seed", type=int, default=seed)
        s.add_argument("--bound", type=int, default=50)
        s.set_defaults(func=cmd_check_slp)

    s = sub.add_parser("jordan", help="basic invariants of multiplication by a linear form")
    s.add_argument("--ideal", required=True)
    s.add_argument("--g", type=int_list, required=True)
    s.set_defaults(func=cmd_jordan)

    s = sub.add_parser("verify-theorem", help="gin vs almost revlex for (a,b,c,2)")
    s.add_argument("--max-exponent", type=int, default=3)
    s.add_argument("--seed", type=int, default=seed)
    s.add_argument("--trials", type=int, default=3)
    s.add_argument("--bound", type=int, default=100)
    s.add_argument("--kslp-trials", type=int, default=20)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--table", action="store_true", help="print a table instead of JSON")
    s.add_argument("--timings", action="store_true", help="record runtime_ms per case")
    s.set_defaults(func=cmd_verify_theorem)

    s = sub.add_parser("reproduce-remark", help="the (3,3,3,3) counterexample")
    s.add_argument("--seed", type=int, default=seed)
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--out")
    s.set_defaults(func=cmd_reproduce_remark)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except UnstableGinError as exc:
        payload = {"error": "unstable-gin", "results": [r.to_json() for r in exc.results]}
        print(dumps(payload))
        print(str(exc), file=sys.stderr)
        return 3
    except RevginError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
