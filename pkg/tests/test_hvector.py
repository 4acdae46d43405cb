import itertools
import math

import pytest
from hypothesis import given, strategies as st

from revgin.errors import DomainError
from revgin.hvector import (
    check_c1,
    check_c2,
    check_c3,
    ci_hilbert,
    difference,
    is_symmetric,
    is_unimodal,
    k_difference,
    slope_profile,
)


def lattice_count(exponents):
    """Count exponent vectors 0 <= e_i < a_i by total degree."""
    out = [0] * (sum(a - 1 for a in exponents) + 1)
    for e in itertools.product(*(range(a) for a in exponents)):
        out[sum(e)] += 1
    return tuple(out)


def test_ci_hilbert_examples():
    assert ci_hilbert([2]) == (1, 1)
    assert ci_hilbert([2, 2, 3]) == (1, 3, 4, 3, 1)
    assert ci_hilbert([3, 3, 3]) == (1, 3, 6, 7, 6, 3, 1)
    assert ci_hilbert([1, 1]) == (1,)
    with pytest.raises(DomainError):
        ci_hilbert([2, 0])


def test_ci_hilbert_binomial_closed_form():
    # squares in n variables give the binomial row
    for n in range(1, 7):
        assert ci_hilbert([2] * n) == tuple(math.comb(n, k) for k in range(n + 1))


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_ci_hilbert_exhaustive(length):
    for e in itertools.product(range(1, 7), repeat=length):
        h = ci_hilbert(e)
        assert h == lattice_count(e)
        assert len(h) == sum(a - 1 for a in e) + 1
        assert sum(h) == math.prod(e)
        assert is_symmetric(h) and is_unimodal(h)


def test_difference_examples():
    assert difference((1, 1, 1)) == (1,)
    assert difference((1, 3, 4, 3, 1)) == (1, 2, 1)
    assert difference((1, 4, 6, 4, 1)) == (1, 3, 2)
    assert difference((1,)) == (1,)


def test_k_difference_examples():
    h = (1, 3, 4, 3, 1)
    assert k_difference(h, 0) == h
    assert k_difference(h, 2) == (1, 1)
    assert k_difference((1, 2, 1), 3) == (1,)
    with pytest.raises(DomainError):
        k_difference(h, -1)


def test_conditions_examples():
    assert check_c1((1, 4))
    assert not check_c1((1, 5, 2, 3))
    assert check_c1((1, 3, 6, 6, 3))
    assert check_c2((4, 1))
    assert not check_c2((5, 1, 3, 2))
    assert check_c2((1, 3, 6, 6, 3))
    assert check_c3((1, 3, 6, 6, 3))
    assert check_c3((1, 3, 1))
    assert not check_c3((1, 2, 5, 3))
    assert check_c1((1,)) and check_c2((1,)) and check_c3((1,))


def test_conditions_read_the_boundary_zeros():
    # the final drop to zero is a descent: 3 -> 0 has 1 and 2 strictly between
    assert not check_c2((1, 2, 3))
    assert check_c2((1, 2, 2))
    assert not check_c1((3, 2, 1))


def test_symmetry_and_unimodality_examples():
    assert is_symmetric((1, 4, 6, 4, 1)) and is_unimodal((1, 4, 6, 4, 1))
    assert not is_symmetric((1, 2, 1, 2)) and not is_unimodal((1, 2, 1, 2))
    assert is_unimodal((1, 3, 3, 1)) and is_unimodal((2, 1))


@pytest.mark.parametrize("abc", list(itertools.combinations_with_replacement(range(2, 7), 3)))
def test_three_variable_ci_satisfies_conditions(abc):
    h = ci_hilbert(abc)
    for hk in (h, difference(h)):
        assert check_c1(hk) and check_c2(hk)
    assert check_c3(h)


def test_slope_profile_examples():
    p = slope_profile(difference(ci_hilbert([2, 2, 2])))
    assert p.segments == ((0, 1, 1),) and p.min_slope == 1
    h = ci_hilbert([2, 2, 5])
    assert h == (1, 3, 4, 4, 4, 3, 1)
    assert difference(h) == (1, 2, 1)
    assert slope_profile(difference(h)).min_slope == -1
    assert slope_profile((5,)).min_slope is None


def test_slope_profile_segments():
    p = slope_profile((1, 2, 3, 3, 3, 1))
    assert p.segments == ((0, 2, 1), (2, 4, 0), (4, 5, -2))
    assert p.to_json() == {"segments": [[0, 2, 1], [2, 4, 0], [4, 5, -2]], "min_slope": -2}


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=12))
def test_slope_profile_segments_cover_and_are_exact(seq):
    p = slope_profile(seq)
    assert p.segments[0][0] == 0 and p.segments[-1][1] == len(seq) - 1
    for (s0, e0, v0), (s1, e1, v1) in zip(p.segments, p.segments[1:]):
        assert e0 == s1 and v0 != v1
    for s, e, v in p.segments:
        assert all(seq[j + 1] - seq[j] == v for j in range(s, e))


def test_slope_bound_including_final_drop():
    # also read the drop to zero after the last entry
    for a, b, c in itertools.combinations_with_replacement(range(1, 7), 3):
        h1 = difference(ci_hilbert([a, b, c]))
        assert slope_profile(list(h1) + [0]).min_slope >= -2
