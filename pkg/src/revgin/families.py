"""Exhaustive enumeration of small Artinian monomial ideals.

An Artinian monomial ideal is determined by its finite set of standard
monomials, an order ideal under divisibility.  These generators walk those
order ideals degree by degree.
"""

from __future__ import annotations

from typing import Iterator

from .groebner import MonomialIdeal
from .poly import revlex_key


def _successors(standard, n):
    out = set()
    for m in standard:
        for i in range(n):
            out.add(tuple(e + (k == i) for k, e in enumerate(m)))
    return out


def _closed_subsets(cands, below):
    """Subsets of ``cands`` containing ``below(m)`` whenever they contain ``m``.

    ``cands`` must list every element after the elements ``below`` returns.
    """
    chosen: list = []
    chosen_set: set = set()

    def rec(k):
        if k == len(cands):
            yield list(chosen)
            return
        yield from rec(k + 1)
        m = cands[k]
        if all(v in chosen_set for v in below(m)):
            chosen.append(m)
            chosen_set.add(m)
            yield from rec(k + 1)
            chosen.pop()
            chosen_set.discard(m)

    yield from rec(0)


def _walk(n, max_socle, strongly_stable):
    def ideal_from(standard_by_degree):
        gens = set()
        std = set(m for layer in standard_by_degree for m in layer)
        for layer in standard_by_degree:
            for m in _successors(layer, n):
                if m not in std:
                    gens.add(m)
        return MonomialIdeal(n, tuple(gens))

    def moves(m):
        # Borel moves towards later variables stay inside the standard set
        for i in range(n):
            if m[i]:
                for j in range(i + 1, n):
                    v = list(m)
                    v[i] -= 1
                    v[j] += 1
                    yield tuple(v)

    def rec(layers):
        d = len(layers)
        prev = set(layers[-1])
        cands = []
        for m in _successors(layers[-1], n):
            divisors_ok = all(
                tuple(e - (k == i) for k, e in enumerate(m)) in prev for i in range(n) if m[i]
            )
            if divisors_ok:
                cands.append(m)
        cands.sort(key=revlex_key)
        if d > max_socle:
            yield ideal_from(layers)
            return
        below = (lambda m: list(moves(m))) if strongly_stable else (lambda m: [])
        for subset in _closed_subsets(cands, below):
            if subset:
                yield from rec(layers + [tuple(subset)])
            else:
                yield ideal_from(layers)

    yield from rec([((0,) * n,)])


def artinian_monomial_ideals(n: int, max_socle: int) -> Iterator[MonomialIdeal]:
    """Every Artinian monomial ideal in ``n`` variables with socle degree ``<= max_socle``
    (and ``1`` not in the ideal)."""
    yield from _walk(n, max_socle, strongly_stable=False)


def borel_fixed_ideals(n: int, max_socle: int) -> Iterator[MonomialIdeal]:
    """Every Borel-fixed Artinian ideal in ``n`` variables with socle degree ``<= max_socle``."""
    yield from _walk(n, max_socle, strongly_stable=True)
