"""Exact linear algebra over Q via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import ShapeError


def integerize_rows(M: Sequence[Sequence]) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers.

    Returns the integer matrix and the product of the row scale factors, so
    that ``det(M) == det(result) / scale`` for square input.
    """
    out = []
    scale = Fraction(1)
    for row in M:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
        scale *= den
    return out, scale


def _bareiss(A: list[list[int]], want_det: bool):
    rows = len(A)
    cols = len(A[0]) if rows else 0
    A = [list(r) for r in A]
    sign = 1
    prev = 1
    rank = 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((k for k in range(r, rows) if A[k][c] != 0), None)
        if piv is None:
            if want_det:
                return 0, 0
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        for k in range(r + 1, rows):
            a = A[k][c]
            rk = A[k]
            rr = A[r]
            for j in range(c + 1, cols):
                rk[j] = (p * rk[j] - a * rr[j]) // prev
            rk[c] = 0
        prev = p
        r += 1
        rank += 1
    if want_det:
        return rank, sign * prev if rank == rows else 0
    return rank, None


def rank(M: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix (list of rows)."""
    if not M or not M[0]:
        return 0
    A, _ = integerize_rows(M)
    # content of each row is irrelevant for rank
    A = [_primitive(r) for r in A]
    return _bareiss(A, want_det=False)[0]


def det(M: Sequence[Sequence]) -> Fraction:
    n = len(M)
    if any(len(r) != n for r in M):
        raise ShapeError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    A, scale = integerize_rows(M)
    return Fraction(_bareiss(A, want_det=True)[1]) / scale


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    return [x // g for x in row] if g else row


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if not B:
        return [[] for _ in A]
    BT = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in BT] for row in A]
