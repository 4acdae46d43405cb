"""Borel-fixed monomial ideals and almost revlex ideals."""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError, InfeasibleHVectorError
from .groebner import MonomialIdeal
from .poly import monomials_of_degree, revlex_key


def _exchanges(u, n):
    """All ``u * x_i / x_j`` with ``i < j`` and ``x_j | u``."""
    for j in range(n):
        if u[j] == 0:
            continue
        for i in range(j):
            v = list(u)
            v[j] -= 1
            v[i] += 1
            yield tuple(v)


def is_borel_fixed(M: MonomialIdeal) -> bool:
    """Strong stability test on the minimal generators (char 0 Borel criterion)."""
    return all(v in M for u in M.gens for v in _exchanges(u, M.n))


def almost_revlex_ideal(h: Sequence[int], n: int) -> MonomialIdeal:
    """The unique almost revlex ideal ``M`` with ``hilbert(R/M) == h``.

    Built degree by degree: in each degree the revlex-largest monomials that
    are not yet in the ideal become new generators until exactly ``h[d]``
    standard monomials remain.  One degree past the end of ``h`` everything
    is absorbed, so the quotient is Artinian.
    """
    h = [int(v) for v in h]
    if n < 1:
        raise DomainError("need at least one variable")
    if not h or h[0] != 1:
        raise InfeasibleHVectorError(f"h-vector must start with 1, got {h}")
    gens: list = []
    standard = [(0,) * n]
    for d in range(1, len(h) + 1):
        target = h[d] if d < len(h) else 0
        # monomials of degree d outside the ideal are exactly the
        # one-step multiples of the previous standard monomials
        cand = set()
        for m in standard:
            for i in range(n):
                cand.add(tuple(e + (k == i) for k, e in enumerate(m)))
        cand = sorted(cand, key=revlex_key, reverse=True)
        # some one-step multiples may already lie in the ideal
        cand = [m for m in cand if not any(all(a <= b for a, b in zip(g, m)) for g in gens)]
        absorb = len(cand) - target
        if absorb < 0:
            raise InfeasibleHVectorError(
                f"h[{d}] = {target} exceeds the {len(cand)} monomials available"
            )
        gens.extend(cand[:absorb])
        standard = cand[absorb:]
        if not standard:
            if any(v != 0 for v in h[d + 1:]):
                raise InfeasibleHVectorError(f"h-vector has an internal zero at degree {d}")
            break
    return MonomialIdeal(n, tuple(gens))


def is_almost_revlex(M: MonomialIdeal) -> bool:
    for u in M.gens:
        key = revlex_key(u)
        for v in monomials_of_degree(M.n, sum(u)):
            if revlex_key(v) <= key:
                break
            if v not in M:
                return False
    return True
