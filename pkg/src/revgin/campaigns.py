"""Reproduction campaigns: gin of four-variable complete intersections, and the
(3,3,3,3) counterexample."""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .borel import almost_revlex_ideal
from .families import borel_fixed_ideals
from .errors import RevginError
from .gin import DEFAULT_BOUND, DEFAULT_TRIALS, compute_gin
from .groebner import IdealGens, QuotientAlgebra, buchberger, complete_intersection, quotient_of
from .hvector import check_c1, check_c2, ci_hilbert
from .lefschetz import (
    DEFAULT_TRIALS as SLP_TRIALS,
    determinant_degree_bound,
    determinant_vanishes_identically,
    find_slp_witness,
    has_k_slp,
    has_slp_with,
    tensor_with_dual_number,
)
from .poly import LinearForm, Polynomial


def theorem_cases(max_exponent: int) -> list[tuple]:
    """One representative ``(a, b, c, 2)`` with ``2 <= a <= b <= c <= max_exponent``
    per permutation class."""
    if max_exponent < 2:
        raise ValueError("max_exponent must be >= 2")
    return [
        abc + (2,)
        for abc in itertools.combinations_with_replacement(range(2, max_exponent + 1), 3)
    ]


def run_case(exponents, seed: int, trials: int, bound: int, kslp_trials: int, timings: bool) -> dict:
    start = time.perf_counter()
    h = ci_hilbert(exponents)
    case = {"exponents": list(exponents), "hilbert": list(h)}
    try:
        cert = compute_gin(complete_intersection(exponents), trials=trials, seed=seed, bound=bound)
        target = almost_revlex_ideal(h, len(exponents))
        case["gin_gens"] = [list(g) for g in cert.result.gens]
        case["almost_revlex_gens"] = [list(g) for g in target.gens]
        case["equal"] = set(cert.result.gens) == set(target.gens)
        case["gin_certificate"] = {
            "trials": cert.trials,
            "seeds": list(cert.seeds),
            "borel_ok": cert.borel_ok,
            "hilbert_ok": cert.hilbert_ok,
        }
        verdict = has_k_slp(quotient_of(complete_intersection(exponents)), 3, trials=kslp_trials, seed=seed)
        case["kslp_verdicts"] = {"3": verdict.to_json()}
        case["error"] = None
    except RevginError as exc:
        case.update(gin_gens=None, almost_revlex_gens=None, equal=False, kslp_verdicts={})
        case["error"] = f"{type(exc).__name__}: {exc}"
    case["runtime_ms"] = round((time.perf_counter() - start) * 1000) if timings else None
    return case


def _run_case_args(args):
    return run_case(*args)


def verify_theorem(
    max_exponent: int,
    seed: int,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
    kslp_trials: int = SLP_TRIALS,
    jobs: int = 1,
    timings: bool = False,
) -> dict:
    """Compare gin with the almost revlex ideal for every ``(a, b, c, 2)`` class.

    Case ``k`` uses seed ``seed + k``; failures are recorded per case.
    """
    cases = theorem_cases(max_exponent)
    work = [(e, seed + k, trials, bound, kslp_trials, timings) for k, e in enumerate(cases)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case_args, work))
    else:
        results = [run_case(*w) for w in work]
    passed = sum(1 for c in results if c["equal"])
    errors = sum(1 for c in results if c["error"])
    return {
        "max_exponent": max_exponent,
        "seed": seed,
        "trials": trials,
        "bound": bound,
        "cases": results,
        "summary": {"cases": len(results), "passed": passed, "failed": len(results) - passed, "errors": errors},
    }


@dataclass(frozen=True)
class TheoremConfig:
    """Settings for :func:`verify_theorem`."""

    max_exponent: int = 3
    seed: int = 7
    trials: int = DEFAULT_TRIALS
    bound: int = DEFAULT_BOUND
    kslp_trials: int = SLP_TRIALS
    jobs: int = 1
    timings: bool = False

    def run(self) -> dict:
        return verify_theorem(**asdict(self))


def render_table(report: dict) -> str:
    lines = [f"{'exponents':<14}{'equal':<7}{'3-SLP':<7}{'#gens':<7}hilbert"]
    for c in report["cases"]:
        k = c["kslp_verdicts"].get("3", {}).get("holds")
        ngens = len(c["gin_gens"]) if c["gin_gens"] is not None else "-"
        lines.append(
            f"{','.join(map(str, c['exponents'])):<14}{str(c['equal']):<7}{str(k):<7}{str(ngens):<7}"
            f"{','.join(map(str, c['hilbert']))}"
        )
    s = report["summary"]
    lines.append(f"passed {s['passed']}/{s['cases']}, errors {s['errors']}")
    return "\n".join(lines)


# --- tensoring with K[y]/(y^2) ---------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """Settings for :func:`tensor_sweep`."""

    n: int = 2
    max_socle: int = 4
    seed: int = 7
    trials: int = 5

    def run(self) -> dict:
        return tensor_sweep(**asdict(self))


def tensor_sweep(n: int, max_socle: int, seed: int = 7, trials: int = 5) -> dict:
    """Compare the SLP of ``A (x) K[y]/(y^2)`` with ``C1 and C2`` on ``h_A``.

    Runs over every Borel-fixed Artinian ``A`` in ``n`` variables with socle
    degree ``<= max_socle`` for which ``x_n`` is a Lefschetz element.
    """
    last = LinearForm.variable(n - 1, n)
    total = skipped = agree = 0
    counts = {"slp": 0, "no_slp": 0}
    mismatches = []
    for I in borel_fixed_ideals(n, max_socle):
        total += 1
        A = quotient_of(I)
        if not has_slp_with(A, last):
            skipped += 1
            continue
        h = A.hilbert()
        predicted = check_c1(h) and check_c2(h)
        verdict = find_slp_witness(quotient_of(tensor_with_dual_number(I)), trials=trials, seed=seed)
        counts["slp" if verdict.holds else "no_slp"] += 1
        if verdict.holds == predicted:
            agree += 1
        else:
            mismatches.append({"gens": [list(g) for g in I.gens], "hilbert": list(h), "slp": verdict.holds})
    return {
        "n": n,
        "max_socle": max_socle,
        "ideals": total,
        "without_last_variable_slp": skipped,
        "compared": total - skipped,
        "agree": agree,
        "counts": counts,
        "mismatches": mismatches,
    }


# --- the (3,3,3,3) example -----------------------------------------------------

REMARK_HILBERT = (1, 3, 6, 6, 3)
REMARK_DEGREE4_BASIS = ((2, 0, 2), (1, 1, 2), (0, 2, 2))


def remark_algebra() -> QuotientAlgebra:
    """``K[x1,x2,x3] / (x1^3, x2^3, x3^3, (x1+x2+x3)^3)``."""
    x = [Polynomial.variable(i, 3) for i in range(3)]
    gens = (x[0] ** 3, x[1] ** 3, x[2] ** 3, (x[0] + x[1] + x[2]) ** 3)
    return QuotientAlgebra(buchberger(IdealGens(3, gens)))


def remark_expansions(a, b, c) -> list[tuple]:
    """Expected coefficients of ``x_i * ell^3`` on ``x1^2x3^2, x1x2x3^2, x2^2x3^2``."""
    return [
        (3 * a * (b - c) ** 2, 3 * b * (2 * a - c) * (b - c), 3 * b**2 * (a - c)),
        (3 * a**2 * (b - c), 3 * a * (a - c) * (2 * b - c), 3 * b * (a - c) ** 2),
        (-3 * a**2 * (b - c), -3 * a * b * (a + b - 2 * c), -3 * b**2 * (a - c)),
    ]


def check_expansions(A: QuotientAlgebra, degree_bound: int = 3) -> list[dict]:
    """Check the three expansions as polynomial identities in ``(a, b, c)``.

    Both sides have degree at most ``degree_bound`` in each parameter, so
    agreement on ``{1..degree_bound+1}^3`` proves the identity.
    """
    results = []
    x = [Polynomial.variable(i, 3) for i in range(3)]
    grid = list(itertools.product(range(1, degree_bound + 2), repeat=3))
    for i in range(3):
        bad = None
        for a, b, c in grid:
            ell = LinearForm((a, b, c)).to_polynomial()
            nf = A.reduce(x[i] * ell**3)
            got = tuple(nf.coeff(m) for m in REMARK_DEGREE4_BASIS)
            want = tuple(Fraction(v) for v in remark_expansions(a, b, c)[i])
            if got != want or len(nf.terms) > sum(1 for v in got if v):
                bad = {"point": [a, b, c], "got": [str(v) for v in got], "want": [str(v) for v in want]}
                break
        results.append({"name": f"x{i + 1}*ell^3 expansion", "ok": bad is None, "points": len(grid), "counterexample": bad})
    return results


@dataclass(frozen=True)
class RemarkConfig:
    """Settings for :func:`reproduce_remark`."""

    seed: int = 7
    trials: int = SLP_TRIALS
    samples: int = 50

    def run(self) -> dict:
        return reproduce_remark(**asdict(self))


def reproduce_remark(seed: int, trials: int = SLP_TRIALS, samples: int = 50) -> dict:
    items = []
    A = remark_algebra()
    h = A.hilbert()
    items.append({"name": "hilbert function", "ok": h == REMARK_HILBERT, "value": list(h)})
    basis4 = A.basis(4)
    items.append(
        {
            "name": "degree-4 standard basis",
            "ok": set(basis4) == set(REMARK_DEGREE4_BASIS),
            "value": [list(m) for m in basis4],
        }
    )
    items.extend(check_expansions(A))
    bound = determinant_degree_bound(A, 1, 3)
    cert = determinant_vanishes_identically(A, 1, 3, 3, bound)
    items.append({"name": "det(x ell^3: A_1 -> A_4) == 0 identically", "ok": cert.certified, "certificate": cert.to_json()})

    # sampled forms all fail exactly at A_1 -> A_4
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        ell = LinearForm(tuple(rng.randint(-50, 50) for _ in range(3)))
        check = has_slp_with(A, ell)
        failures.append(None if check.holds else list(check.failing_map[:2]))
    items.append(
        {
            "name": f"{samples} sampled forms fail at (i=1, s=3)",
            "ok": all(f == [1, 3] for f in failures),
            "value": failures[:5],
        }
    )
    ci = quotient_of(complete_intersection((3, 3, 3, 3)))
    slp = find_slp_witness(ci, trials=trials, seed=seed)
    items.append({"name": "R/(x1^3,..,x4^3) has the SLP", "ok": slp.holds, "verdict": slp.to_json()})
    k2 = has_k_slp(ci, 2, trials=trials, seed=seed)
    items.append({"name": "R/(x1^3,..,x4^3) has no 2-SLP witness", "ok": not k2.holds, "verdict": k2.to_json()})
    return {
        "seed": seed,
        "trials": trials,
        "items": items,
        "ok": all(item["ok"] for item in items),
    }
