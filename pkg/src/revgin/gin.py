"""Generic initial ideals in revlex via random coordinate changes."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .borel import is_borel_fixed
from .errors import DomainError, UnstableGinError
from .groebner import (
    IdealGens,
    MonomialIdeal,
    buchberger,
    initial_ideal,
    quotient_of,
)
from .poly import apply_linear_change, determinant

DEFAULT_TRIALS = 3
DEFAULT_BOUND = 100


@dataclass(frozen=True)
class GinCertificate:
    result: MonomialIdeal
    trials: int
    seeds: tuple
    bound: int
    borel_ok: bool
    hilbert_ok: bool

    def to_json(self) -> dict:
        return {
            "result": self.result.to_json(),
            "trials": self.trials,
            "seeds": list(self.seeds),
            "bound": self.bound,
            "borel_ok": self.borel_ok,
            "hilbert_ok": self.hilbert_ok,
        }


def random_gl(n: int, seed: int, bound: int) -> list[list[int]]:
    """Dense invertible integer matrix with entries in ``[-bound, bound]``.

    Deterministic in ``(n, seed, bound)``; singular draws are resampled.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    rng = random.Random(seed)
    while True:
        M = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if determinant(M) != 0:
            return M


def change_coordinates(I: IdealGens, M) -> IdealGens:
    return IdealGens(I.n, tuple(apply_linear_change(g, M) for g in I.generators))


def initial_after_change(I: IdealGens, M) -> MonomialIdeal:
    return initial_ideal(buchberger(change_coordinates(I, M)))


def compute_gin(
    I: IdealGens | MonomialIdeal,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
) -> GinCertificate:
    """Compute ``gin(I)`` from ``trials`` independent random coordinate changes.

    Raises :class:`UnstableGinError` if the trials disagree.
    """
    if trials < 2:
        raise DomainError("need at least two trials to certify stability")
    if isinstance(I, MonomialIdeal):
        I = I.as_ideal_gens()
    # refuses non-Artinian input before any random work
    h = quotient_of(I).hilbert()
    seeds = tuple(seed + t for t in range(1, trials + 1))
    results = []
    for s in seeds:
        results.append(initial_after_change(I, random_gl(I.n, s, bound)))
    distinct = list(dict.fromkeys(results))
    if len(distinct) > 1:
        raise UnstableGinError(distinct)
    result = distinct[0]
    return GinCertificate(
        result=result,
        trials=trials,
        seeds=seeds,
        bound=bound,
        borel_ok=is_borel_fixed(result),
        hilbert_ok=quotient_of(result).hilbert() == h,
    )
