import itertools

import pytest

from revgin.borel import is_borel_fixed
from revgin.families import artinian_monomial_ideals, borel_fixed_ideals
from revgin.groebner import quotient_of
from revgin.poly import monomials_of_degree


def brute_order_ideals(n, max_socle):
    """Standard-monomial sets: every divisor-closed set of monomials of
    degree <= max_socle that contains 1."""
    monos = [m for d in range(1, max_socle + 1) for m in monomials_of_degree(n, d)]
    out = set()
    for bits in itertools.product((0, 1), repeat=len(monos)):
        chosen = {m for m, b in zip(monos, bits) if b} | {(0,) * n}
        closed = all(
            tuple(e - (k == i) for k, e in enumerate(m)) in chosen
            for m in chosen
            for i in range(n)
            if m[i]
        )
        if closed:
            out.add(frozenset(chosen))
    return out


def standard_set(I):
    Q = quotient_of(I)
    return frozenset(m for d in range(Q.socle_degree + 1) for m in Q.basis(d))


@pytest.mark.parametrize("n,socle", [(1, 5), (2, 3), (2, 4), (3, 2)])
def test_artinian_family_is_exhaustive(n, socle):
    found = [standard_set(I) for I in artinian_monomial_ideals(n, socle)]
    assert len(found) == len(set(found))
    assert set(found) == brute_order_ideals(n, socle)


@pytest.mark.parametrize("n,socle", [(2, 4), (3, 3)])
def test_borel_family_is_the_borel_part(n, socle):
    borel = set(borel_fixed_ideals(n, socle))
    expected = {I for I in artinian_monomial_ideals(n, socle) if is_borel_fixed(I)}
    assert borel == expected


def test_counts():
    assert sum(1 for _ in borel_fixed_ideals(2, 5)) == 63
    assert sum(1 for _ in borel_fixed_ideals(3, 4)) == 351
    assert sum(1 for _ in artinian_monomial_ideals(2, 4)) == 131
