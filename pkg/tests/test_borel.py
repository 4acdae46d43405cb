import itertools

import pytest

from revgin.borel import almost_revlex_ideal, is_almost_revlex, is_borel_fixed
from revgin.errors import InfeasibleHVectorError
from revgin.families import artinian_monomial_ideals
from revgin.groebner import MonomialIdeal, quotient_of
from revgin.hvector import ci_hilbert
from revgin.poly import monomials_of_degree


def M(n, *gens):
    return MonomialIdeal(n, tuple(gens))


def brute_almost_revlex(n, max_socle):
    """Almost revlex ideals found by testing every Artinian monomial ideal
    against the definition directly (no revlex helper from the package)."""
    def greater(u, v):
        diff = [a - b for a, b in zip(u, v)]
        nz = [d for d in diff if d]
        return bool(nz) and nz[-1] < 0

    out = {}
    for I in artinian_monomial_ideals(n, max_socle):
        ok = all(
            v in I
            for u in I.gens
            for v in monomials_of_degree(n, sum(u))
            if greater(v, u)
        )
        if ok:
            out.setdefault(quotient_of(I).hilbert(), []).append(I)
    return out


def test_borel_examples():
    assert is_borel_fixed(M(2, (2, 0), (1, 1), (0, 3)))
    assert not is_borel_fixed(M(2, (0, 1)))
    for n in range(1, 5):
        assert is_borel_fixed(M(n, (1,) + (0,) * (n - 1)))
    assert not is_borel_fixed(M(2, (2, 0), (0, 2)))


def test_almost_revlex_examples():
    assert almost_revlex_ideal((1, 2, 1), 2) == M(2, (2, 0), (1, 1), (0, 3))
    assert almost_revlex_ideal((1,), 3) == M(3, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert is_almost_revlex(M(2, (2, 0), (1, 1), (0, 3)))
    assert not is_almost_revlex(M(2, (2, 0), (0, 2)))


def test_brute_force_agrees_on_small_cases():
    found = brute_almost_revlex(2, 3)
    assert found[(1, 2, 1)] == [M(2, (2, 0), (1, 1), (0, 3))]
    for h, ideals in found.items():
        assert len(ideals) == 1
        assert almost_revlex_ideal(h, 2) == ideals[0]


@pytest.mark.parametrize("n,socle", [(1, 6), (2, 6), (3, 3)])
def test_uniqueness(n, socle):
    for I in artinian_monomial_ideals(n, socle):
        if is_almost_revlex(I):
            assert almost_revlex_ideal(quotient_of(I).hilbert(), n) == I


@pytest.mark.slow
def test_uniqueness_three_variables_socle_four():
    for I in artinian_monomial_ideals(3, 4):
        if is_almost_revlex(I):
            assert almost_revlex_ideal(quotient_of(I).hilbert(), 3) == I


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_round_trip_on_ci_vectors(length):
    for e in itertools.product(range(1, 5), repeat=length):
        h = ci_hilbert(e)
        I = almost_revlex_ideal(h, length)
        assert quotient_of(I).hilbert() == h
        assert is_borel_fixed(I) and is_almost_revlex(I)


def test_more_variables_than_needed():
    # h = (1,2,1) in 3 variables: x1 is a generator, the rest lives in x2, x3
    I = almost_revlex_ideal((1, 2, 1), 3)
    assert (1, 0, 0) in I.gens
    assert quotient_of(I).hilbert() == (1, 2, 1)


@pytest.mark.parametrize(
    "h,n",
    [((1, 3), 2), ((1, 2, 4), 2), ((2, 1), 2), ((1, 0, 1), 2), ((), 2)],
)
def test_infeasible(h, n):
    with pytest.raises(InfeasibleHVectorError):
        almost_revlex_ideal(h, n)
