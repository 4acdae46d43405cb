"""Independent oracles shared by several test modules."""

from fractions import Fraction
from itertools import product

import sympy

from revgin.poly import Polynomial, monomials_of_degree


def revlex_greater(u, v):
    """Graded revlex straight from the definition."""
    if sum(u) != sum(v):
        return sum(u) > sum(v)
    diff = [a - b for a, b in zip(u, v)]
    nonzero = [d for d in diff if d != 0]
    return bool(nonzero) and nonzero[-1] < 0


def ideal_dimensions(gens, n, max_degree):
    """dim_K I_d for d <= max_degree by ranks of coefficient matrices (sympy)."""
    out = []
    for d in range(max_degree + 1):
        basis = monomials_of_degree(n, d)
        col = {m: k for k, m in enumerate(basis)}
        rows = []
        for g in gens:
            gd = g.degree()
            if gd > d:
                continue
            for t in monomials_of_degree(n, d - gd):
                p = g * Polynomial.monomial(t)
                row = [0] * len(basis)
                for m, c in p.terms:
                    row[col[m]] = sympy.Rational(c.numerator, c.denominator)
                rows.append(row)
        out.append(sympy.Matrix(rows).rank() if rows else 0)
    return out


def brute_hilbert(gens, n, max_degree):
    dims = ideal_dimensions(gens, n, max_degree)
    h = [len(monomials_of_degree(n, d)) - dims[d] for d in range(max_degree + 1)]
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def to_sympy(p, xs):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.prod([x**e for x, e in zip(xs, m)]) for m, c in p.terms),
        sympy.Integer(0),
    )


def from_sympy(expr, xs):
    poly = sympy.Poly(expr, *xs)
    return Polynomial(len(xs), {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def sympy_inverse(M):
    inv = sympy.Matrix(M).inv()
    return [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols)] for i in range(inv.rows)]


def grid(side, dims):
    return product(range(1, side + 1), repeat=dims)
