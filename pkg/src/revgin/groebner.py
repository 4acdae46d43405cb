"""Buchberger's algorithm in revlex, initial ideals and Artinian quotients."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, NotArtinianError
from .poly import (
    Monomial,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    revlex_key,
)


@dataclass(frozen=True)
class IdealGens:
    n: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise DomainError("an ideal needs at least one generator")
        for g in gens:
            if g.n != self.n:
                raise DimensionError(f"generator {g!r} is not in {self.n} variables")
            if g.is_zero():
                raise DomainError("zero generator")

    def to_json(self) -> dict:
        return {"n": self.n, "polys": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "IdealGens":
        n = int(data["n"])
        return cls(n, tuple(Polynomial.from_json(p, n) for p in data["polys"]))


def minimalize(monos: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators of the monomial ideal spanned by ``monos``."""
    out: list[Monomial] = []
    for m in sorted(set(map(tuple, monos)), key=lambda m: (sum(m), revlex_key(m))):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def generator_order(m: Monomial) -> tuple:
    """Sort key: increasing degree, then descending revlex."""
    return (sum(m),) + tuple(reversed(m))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Generators are listed by increasing degree, descending revlex within a degree.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        gens = minimalize(self.gens)
        for g in gens:
            if len(g) != self.n:
                raise DimensionError(f"generator {g} is not in {self.n} variables")
        gens.sort(key=generator_order)
        object.__setattr__(self, "gens", tuple(gens))

    def __contains__(self, m) -> bool:
        m = tuple(m)
        return any(mono_divides(g, m) for g in self.gens)

    def as_ideal_gens(self) -> IdealGens:
        return IdealGens(self.n, tuple(Polynomial.monomial(g) for g in self.gens))

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return cls(int(data["n"]), tuple(tuple(g) for g in data["gens"]))


def complete_intersection(exponents: Sequence[int]) -> MonomialIdeal:
    """``(x1^a1, ..., xn^an)``."""
    n = len(exponents)
    if n == 0 or any(a < 1 for a in exponents):
        raise DomainError("complete intersection needs exponents >= 1")
    return MonomialIdeal(n, tuple(tuple(a if i == j else 0 for j in range(n)) for i, a in enumerate(exponents)))


@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    elements: tuple

    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.elements]

    def to_json(self) -> dict:
        return {"n": self.n, "elements": [g.to_json() for g in self.elements]}

    @classmethod
    def from_json(cls, data: dict) -> "GroebnerBasis":
        n = int(data["n"])
        return cls(n, tuple(Polynomial.from_json(p, n) for p in data["elements"]))


# --- integer-coefficient internals -------------------------------------------


def _lead(f: dict) -> Monomial:
    return max(f, key=revlex_key)


def _content_free(f: dict) -> dict:
    g = 0
    for c in f.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = f[_lead(f)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        f = {m: c // g for m, c in f.items()}
    return f


def _integer_poly(p: Polynomial) -> dict:
    den = 1
    for _, c in p.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    return _content_free({m: int(c * den) for m, c in p.terms})


class _Elem:
    __slots__ = ("lm", "poly", "lc")

    def __init__(self, poly: dict):
        self.poly = poly
        self.lm = _lead(poly)
        self.lc = poly[self.lm]


def _reduce(f: dict, basis: Sequence[_Elem], full: bool) -> dict:
    """Reduce ``f`` modulo ``basis``; result is defined up to a scalar factor.

    With ``full`` every term is reduced, otherwise only the leading term.
    """
    f = dict(f)
    done: dict = {}
    while f:
        m = _lead(f)
        c = f[m]
        for e in basis:
            if mono_divides(e.lm, m):
                break
        else:
            if not full:
                break
            done[m] = c
            del f[m]
            continue
        t = mono_div(m, e.lm)
        g = gcd(c, e.lc)
        a, b = e.lc // g, c // g
        if a != 1:
            f = {k: a * v for k, v in f.items()}
            done = {k: a * v for k, v in done.items()}
        for gm, gc in e.poly.items():
            k = mono_mul(gm, t)
            v = f.get(k, 0) - b * gc
            if v:
                f[k] = v
            else:
                f.pop(k, None)
        if a != 1 and f:
            # keep coefficient growth in check
            g2 = 0
            for v in f.values():
                g2 = gcd(g2, v)
                if g2 == 1:
                    break
            for v in done.values():
                if g2 == 1:
                    break
                g2 = gcd(g2, v)
            if g2 > 1:
                f = {k: v // g2 for k, v in f.items()}
                done = {k: v // g2 for k, v in done.items()}
    f.update(done)
    return _content_free(f) if f else f


def _spoly(e1: _Elem, e2: _Elem) -> dict:
    L = mono_lcm(e1.lm, e2.lm)
    t1, t2 = mono_div(L, e1.lm), mono_div(L, e2.lm)
    g = gcd(e1.lc, e2.lc)
    a, b = e2.lc // g, e1.lc // g
    out: dict = {}
    for m, c in e1.poly.items():
        k = mono_mul(m, t1)
        out[k] = out.get(k, 0) + a * c
    for m, c in e2.poly.items():
        k = mono_mul(m, t2)
        v = out.get(k, 0) - b * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return {k: v for k, v in out.items() if v}


def buchberger(I: IdealGens) -> GroebnerBasis:
    """Reduced monic Groebner basis of ``I`` in revlex.

    Normal selection strategy with Buchberger's coprime and chain criteria.
    """
    basis: list[_Elem] = []
    pending: set = set()
    heap: list = []

    def push_pairs(j: int):
        ej = basis[j]
        for i in range(j):
            L = mono_lcm(basis[i].lm, ej.lm)
            heapq.heappush(heap, (revlex_key(L), i, j))
            pending.add((i, j))

    def chain_skip(i: int, j: int, L: Monomial) -> bool:
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(basis[k].lm, L):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    for g in sorted(I.generators, key=lambda p: revlex_key(p.lm)):
        f = _reduce(_integer_poly(g), basis, full=False)
        if f:
            basis.append(_Elem(f))
            push_pairs(len(basis) - 1)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        ei, ej = basis[i], basis[j]
        L = mono_lcm(ei.lm, ej.lm)
        if gcd_trivial(ei.lm, ej.lm):
            continue
        if chain_skip(i, j, L):
            continue
        f = _reduce(_spoly(ei, ej), basis, full=False)
        if f:
            basis.append(_Elem(f))
            push_pairs(len(basis) - 1)

    return GroebnerBasis(I.n, _reduced_basis(basis))


def gcd_trivial(u: Monomial, v: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(u, v))


def _reduced_basis(basis: list[_Elem]) -> tuple:
    lms = minimalize(e.lm for e in basis)
    keep: list[_Elem] = []
    seen = set()
    for e in basis:
        if e.lm in lms and e.lm not in seen:
            seen.add(e.lm)
            keep.append(e)
    out = [_reduce_tail(e, [o for o in keep if o is not e]) for e in keep]
    out.sort(key=lambda p: revlex_key(p.lm), reverse=True)
    return tuple(out)


def _reduce_tail(e: _Elem, others: list[_Elem]) -> Polynomial:
    """Fully reduce all non-leading terms of ``e`` and return it monic."""
    f = dict(e.poly)
    done = {e.lm: f.pop(e.lm)}
    while f:
        m = _lead(f)
        c = f[m]
        for o in others:
            if mono_divides(o.lm, m):
                break
        else:
            done[m] = c
            del f[m]
            continue
        t = mono_div(m, o.lm)
        g = gcd(c, o.lc)
        a, b = o.lc // g, c // g
        if a != 1:
            f = {k: a * v for k, v in f.items()}
            done = {k: a * v for k, v in done.items()}
        for gm, gc in o.poly.items():
            k = mono_mul(gm, t)
            v = f.get(k, 0) - b * gc
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    lc = Fraction(done[e.lm])
    return Polynomial._raw(len(e.lm), {m: Fraction(c) / lc for m, c in done.items()})


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of the multivariate division of ``f`` by ``G``.

    Every term of the result is irreducible by the leading monomials of ``G``.
    """
    G = [g for g in G]
    if not G:
        raise DomainError("empty divisor list")
    for g in G:
        if g.n != f.n:
            raise DimensionError("divisor in a different ring")
        if g.is_zero():
            raise DomainError("zero divisor polynomial")
    leads = [(g.lm, g.lc, g) for g in G]
    rest = f.as_dict()
    rem: dict = {}
    while rest:
        m = _lead(rest)
        c = rest[m]
        for lm, lc, g in leads:
            if mono_divides(lm, m):
                q = c / lc
                t = mono_div(m, lm)
                for gm, gc in g.terms:
                    k = mono_mul(gm, t)
                    v = rest.get(k, 0) - q * gc
                    if v:
                        rest[k] = v
                    else:
                        rest.pop(k, None)
                break
        else:
            rem[m] = c
            del rest[m]
    return Polynomial._raw(f.n, rem)


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.n, tuple(G.leading_monomials()))


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Check that every S-polynomial reduces to zero."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            a, b = G[i], G[j]
            L = mono_lcm(a.lm, b.lm)
            s = Polynomial.monomial(mono_div(L, a.lm), 1 / a.lc) * a - Polynomial.monomial(
                mono_div(L, b.lm), 1 / b.lc
            ) * b
            if not normal_form(s, G).is_zero():
                return False
    return True


class QuotientAlgebra:
    """The graded algebra ``R / I`` presented by a reduced Groebner basis of ``I``.

    Normal forms of monomials are memoised, so repeated multiplication maps
    are cheap.
    """

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.n = gb.n
        self.ideal = initial_ideal(gb)
        n = self.n
        for i in range(n):
            if not any(sum(g) == g[i] for g in self.ideal.gens):
                raise NotArtinianError(f"no power of x{i + 1} in the initial ideal")
        degrees = []
        current = [(0,) * n]
        if current[0] in self.ideal:
            current = []
        while current:
            degrees.append(tuple(current))
            nxt = set()
            for m in current:
                for i in range(n):
                    u = tuple(e + (k == i) for k, e in enumerate(m))
                    if u not in self.ideal:
                        nxt.add(u)
            current = sorted(nxt, key=revlex_key, reverse=True)
        self.standard_monomials = tuple(degrees)
        self.socle_degree = len(degrees) - 1
        self._index = [{m: k for k, m in enumerate(ms)} for ms in degrees]
        self._by_lead = {g.lm: g for g in gb.elements}
        self._nf: dict = {}

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.standard_monomials)

    def basis(self, d: int) -> tuple:
        if 0 <= d < len(self.standard_monomials):
            return self.standard_monomials[d]
        return ()

    def index(self, d: int) -> dict:
        return self._index[d] if 0 <= d < len(self._index) else {}

    def hilbert(self) -> tuple:
        return tuple(len(b) for b in self.standard_monomials) or (0,)

    def nf_monomial(self, m: Monomial) -> dict:
        """Normal form of a monomial as ``{standard monomial: coefficient}``."""
        m = tuple(m)
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        d = sum(m)
        if m in self.index(d):
            out = {m: Fraction(1)}
        elif d > self.socle_degree:
            out = {}
        else:
            g = next(g for lm, g in self._by_lead.items() if mono_divides(lm, m))
            t = mono_div(m, g.lm)
            out = {}
            # g is monic: m = t*lm == -t*tail  (mod I)
            for gm, gc in g.terms[1:]:
                for k, v in self.nf_monomial(mono_mul(gm, t)).items():
                    w = out.get(k, 0) - gc * v
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        self._nf[m] = out
        return out

    def reduce(self, f: Polynomial) -> Polynomial:
        acc: dict = {}
        for m, c in f.terms:
            for k, v in self.nf_monomial(m).items():
                w = acc.get(k, 0) + c * v
                if w:
                    acc[k] = w
                else:
                    acc.pop(k, None)
        return Polynomial._raw(self.n, acc)

    def to_json(self) -> dict:
        return {
            "gb": self.gb.to_json(),
            "standard_monomials": [[list(m) for m in ms] for ms in self.standard_monomials],
            "socle_degree": self.socle_degree,
        }


def quotient_algebra(G: GroebnerBasis) -> QuotientAlgebra:
    return QuotientAlgebra(G)


def hilbert_function(Q: QuotientAlgebra) -> tuple:
    """Hilbert function of ``Q`` as an h-vector (trailing zeros trimmed)."""
    return Q.hilbert()


def quotient_of(I) -> QuotientAlgebra:
    """Convenience: quotient algebra of an :class:`IdealGens` or :class:`MonomialIdeal`."""
    if isinstance(I, MonomialIdeal):
        gens = tuple(Polynomial.monomial(g) for g in I.gens)
        return QuotientAlgebra(GroebnerBasis(I.n, gens))
    return QuotientAlgebra(buchberger(I))
