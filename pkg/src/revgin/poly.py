"""Exact multivariate polynomials over Q in graded reverse lexicographic order.

Monomials are plain tuples of exponents.  The variable ``x1`` is the largest,
so in two variables ``x1^2 > x1*x2 > x2^2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, SingularMatrixError

Monomial = tuple


@lru_cache(maxsize=None)
def revlex_key(m: Monomial) -> tuple:
    """Sort key: ``revlex_key(u) > revlex_key(v)`` iff ``u > v`` in revlex."""
    return (sum(m),) + tuple(-e for e in reversed(m))


def revlex_cmp(u: Monomial, v: Monomial) -> int:
    """Return -1, 0 or 1 as ``u`` is smaller than, equal to or greater than ``v``."""
    if len(u) != len(v):
        raise DimensionError(f"monomials in {len(u)} and {len(v)} variables")
    ku, kv = revlex_key(u), revlex_key(v)
    return (ku > kv) - (ku < kv)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All monomials of degree ``d`` in ``n`` variables, strictly descending."""
    if n < 1 or d < 0:
        return []
    out = []
    # stars and bars over positions of n-1 separators
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 1 - prev - 1)
        out.append(tuple(exps))
    out.sort(key=revlex_key, reverse=True)
    assert len(out) == comb(d + n - 1, n - 1)
    return out


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u: Monomial, v: Monomial) -> bool:
    """True iff ``u`` divides ``v``."""
    return all(a <= b for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    """``u / v``; caller guarantees ``v | u``."""
    return tuple(a - b for a, b in zip(u, v))


def mono_str(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable polynomial with rational coefficients.

    Terms are kept sorted in descending revlex order so that the leading term
    is the first entry.
    """

    __slots__ = ("n", "_terms", "_dict", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | Iterable = ()):
        if n < 1:
            raise DimensionError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != n:
                raise DimensionError(f"monomial {m} is not in {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            acc[m] = acc.get(m, 0) + _as_fraction(c)
        self.n = n
        self._dict = {m: c for m, c in acc.items() if c != 0}
        self._terms = tuple(
            sorted(self._dict.items(), key=lambda t: revlex_key(t[0]), reverse=True)
        )
        self._hash = None

    @classmethod
    def _raw(cls, n: int, d: dict) -> "Polynomial":
        # trusted constructor: d has valid monomials and no zero coefficients
        p = cls.__new__(cls)
        p.n = n
        p._dict = d
        p._terms = tuple(sorted(d.items(), key=lambda t: revlex_key(t[0]), reverse=True))
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c=1) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, m: Sequence[int], c=1) -> "Polynomial":
        m = tuple(m)
        return cls(len(m), {m: c})

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        """The variable ``x_{i+1}`` (0-based index ``i``)."""
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @property
    def terms(self) -> tuple:
        """``(monomial, coefficient)`` pairs in descending revlex order."""
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._dict)

    def coeff(self, m: Monomial) -> Fraction:
        return self._dict.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def lm(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self._terms[0][0]

    @property
    def lc(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._terms[0][1]

    def degree(self) -> int:
        return max((sum(m) for m in self._dict), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._dict}) <= 1

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.lc
        return Polynomial._raw(self.n, {m: c / lc for m, c in self._dict.items()})

    def _check(self, other: "Polynomial"):
        if other.n != self.n:
            raise DimensionError(f"{self.n} vs {other.n} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        self._check(other)
        d = dict(self._dict)
        for m, c in other._dict.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial._raw(self.n, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {m: -c for m, c in self._dict.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        c = _as_fraction(other)
        if c == 0:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {m: v * c for m, v in self._dict.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._dict == other._dict
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._terms))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in self._terms:
            ms = mono_str(m)
            if ms == "1":
                out.append(str(c))
            elif c == 1:
                out.append(ms)
            elif c == -1:
                out.append("-" + ms)
            else:
                out.append(f"{c}*{ms}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> list:
        return [{"coeff": str(c), "mono": list(m)} for m, c in self._terms]

    @classmethod
    def from_json(cls, data: list, n: int | None = None) -> "Polynomial":
        if n is None:
            if not data:
                raise ValueError("cannot infer variable count of empty polynomial")
            n = len(data[0]["mono"])
        return cls(n, [(tuple(t["mono"]), Fraction(str(t["coeff"]))) for t in data])


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    d: dict = {}
    for m1, c1 in p._dict.items():
        for m2, c2 in q._dict.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            d[m] = d.get(m, 0) + c1 * c2
    return Polynomial._raw(p.n, {m: c for m, c in d.items() if c})


@dataclass(frozen=True)
class LinearForm:
    """``sum(c_i * x_i)`` with exact coefficients."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(_as_fraction(c) for c in self.coefficients)
        )

    @classmethod
    def variable(cls, i: int, n: int) -> "LinearForm":
        return cls(tuple(1 if k == i else 0 for k in range(n)))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def to_polynomial(self) -> Polynomial:
        n = self.n
        return Polynomial(
            n,
            {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(self.coefficients)},
        )

    def to_json(self) -> list:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data) -> "LinearForm":
        return cls(tuple(Fraction(str(c)) for c in data))


def determinant(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free elimination (see :mod:`revgin.linalg`)."""
    from .linalg import det

    return det(M)


def apply_linear_change(p: Polynomial, M: Sequence[Sequence], check_invertible: bool = False) -> Polynomial:
    """Substitute ``x_i -> sum_j M[i][j] * x_j`` into ``p``."""
    n = p.n
    if len(M) != n or any(len(row) != n for row in M):
        raise DimensionError(f"matrix must be {n}x{n}")
    if check_invertible and determinant(M) == 0:
        raise SingularMatrixError("coordinate change is not invertible")
    images = [Polynomial(n, {tuple(int(k == j) for k in range(n)): M[i][j] for j in range(n)}) for i in range(n)]
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    result = Polynomial.zero(n)
    for m, c in p.terms:
        term = Polynomial.constant(n, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result
