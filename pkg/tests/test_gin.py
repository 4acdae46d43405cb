import pytest

import revgin.gin as gin_mod
from revgin.borel import almost_revlex_ideal
from revgin.errors import DomainError, NotArtinianError, UnstableGinError
from revgin.gin import compute_gin, initial_after_change, random_gl
from revgin.groebner import IdealGens, MonomialIdeal, complete_intersection
from revgin.linalg import det
from revgin.poly import Polynomial, apply_linear_change


def test_random_gl_deterministic_and_invertible():
    assert random_gl(3, 11, 5) == random_gl(3, 11, 5)
    assert random_gl(3, 11, 5) != random_gl(3, 12, 5)
    (a,), = random_gl(1, 4, 3)
    assert a != 0 and -3 <= a <= 3
    for seed in range(1000):
        M = random_gl(4, seed, 50)
        assert det(M) != 0
        assert all(-50 <= v <= 50 for row in M for v in row)
    with pytest.raises(DomainError):
        random_gl(2, 0, 0)


def test_one_variable():
    cert = compute_gin(complete_intersection([4]), seed=1)
    assert cert.result == MonomialIdeal(1, ((4,),))


def test_two_squares_by_explicit_matrices():
    I = complete_intersection([2, 2]).as_ideal_gens()
    expected = MonomialIdeal(2, ((2, 0), (1, 1), (0, 3)))
    for M in ([[1, 1], [1, -1]], [[2, 3], [5, 7]], [[1, 2], [-3, 1]]):
        assert initial_after_change(I, M) == expected
    # a diagonal change is not generic
    assert initial_after_change(I, [[2, 0], [0, 3]]) == complete_intersection([2, 2])
    cert = compute_gin(I, seed=3)
    assert cert.result == expected == almost_revlex_ideal((1, 2, 1), 2)
    assert cert.seeds == (4, 5, 6) and cert.borel_ok and cert.hilbert_ok


def test_four_squares_equal_almost_revlex():
    cert = compute_gin(complete_intersection([2, 2, 2, 2]), seed=0)
    assert cert.result == almost_revlex_ideal((1, 4, 6, 4, 1), 4)


def test_errors():
    with pytest.raises(DomainError):
        compute_gin(complete_intersection([2, 2]), trials=1)
    x1 = Polynomial.variable(0, 2)
    with pytest.raises(NotArtinianError):
        compute_gin(IdealGens(2, (x1**2,)))


def test_unstable_gin_reports_all_results(monkeypatch):
    real = gin_mod.random_gl

    def flaky(n, seed, bound):
        if seed == 2:
            return [[int(i == j) for j in range(n)] for i in range(n)]
        return real(n, seed, bound)

    monkeypatch.setattr(gin_mod, "random_gl", flaky)
    with pytest.raises(UnstableGinError) as info:
        compute_gin(complete_intersection([2, 2]), trials=3, seed=0)
    assert set(info.value.results) == {
        complete_intersection([2, 2]),
        MonomialIdeal(2, ((2, 0), (1, 1), (0, 3))),
    }


def test_invariances():
    I = complete_intersection([2, 3, 3]).as_ideal_gens()
    base = compute_gin(I, seed=5)
    permuted = IdealGens(3, tuple(reversed(I.generators)))
    assert compute_gin(permuted, seed=5).result == base.result
    M = random_gl(3, 99, 7)
    moved = IdealGens(3, tuple(apply_linear_change(g, M) for g in I.generators))
    assert compute_gin(moved, seed=21).result == base.result
    assert compute_gin(I, seed=5) == base
    assert base.to_json()["seeds"] == [6, 7, 8]
