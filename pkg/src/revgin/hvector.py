"""h-vector combinatorics: complete intersection series, differences, (C1)-(C3)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError

HVector = tuple


def as_hvector(values: Sequence[int]) -> HVector:
    """Normalise to a tuple without trailing zeros; the zero vector is ``(0,)``."""
    h = [int(v) for v in values]
    if any(v < 0 for v in h):
        raise DomainError(f"negative entry in {h}")
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h) if h else (0,)


def ci_hilbert(exponents: Sequence[int]) -> HVector:
    """Coefficients of ``prod_i (1 + t + ... + t^(a_i - 1))``."""
    h = [1]
    for a in exponents:
        if a < 1:
            raise DomainError(f"exponent {a} < 1")
        out = [0] * (len(h) + a - 1)
        for i, v in enumerate(h):
            for k in range(a):
                out[i + k] += v
        h = out
    return tuple(h)


def difference(h: Sequence[int]) -> HVector:
    """``(Dh)_i = max(h_i - h_{i-1}, 0)`` with ``h_{-1} = 0``."""
    prev = 0
    out = []
    for v in h:
        out.append(max(v - prev, 0))
        prev = v
    return as_hvector(out)


def k_difference(h: Sequence[int], k: int) -> HVector:
    if k < 0:
        raise DomainError("k must be non-negative")
    h = as_hvector(h)
    for _ in range(k):
        h = difference(h)
    return h


def _padded(h):
    return [0] + list(h) + [0]


def check_c1(h: Sequence[int]) -> bool:
    """At most one entry lies strictly inside each rise ``h_i < h_{i+1}``.

    Rises and falls are read on ``h`` padded with zeros on both sides; the
    intermediate entries are counted by index over ``h`` itself.
    """
    h = list(h)
    p = _padded(h)
    for lo, hi in zip(p, p[1:]):
        if lo < hi and sum(1 for v in h if lo < v < hi) > 1:
            return False
    return True


def check_c2(h: Sequence[int]) -> bool:
    """Mirror of :func:`check_c1` for falls ``h_i > h_{i+1}``."""
    h = list(h)
    p = _padded(h)
    for hi, lo in zip(p, p[1:]):
        if hi > lo and sum(1 for v in h if lo < v < hi) > 1:
            return False
    return True


def check_c3(h: Sequence[int]) -> bool:
    h = list(h)
    if not h:
        raise DomainError("empty h-vector")
    top = max(h)
    where = [i for i, v in enumerate(h) if v == top]
    if len(where) >= 2:
        return True
    i = where[0]
    before = h[i - 1] if i >= 1 else 0
    after = h[i + 1] if i + 1 < len(h) else 0
    return before >= after


def is_symmetric(h: Sequence[int]) -> bool:
    h = list(as_hvector(h))
    return h == h[::-1]


def is_unimodal(h: Sequence[int]) -> bool:
    h = list(h)
    i = 0
    while i + 1 < len(h) and h[i] <= h[i + 1]:
        i += 1
    while i + 1 < len(h) and h[i] >= h[i + 1]:
        i += 1
    return i + 1 >= len(h)


@dataclass(frozen=True)
class SlopeProfile:
    """Maximal runs of constant discrete slope ``h[j+1] - h[j]``.

    A segment ``(start, end, slope)`` means ``h[j+1] - h[j] == slope`` for
    ``start <= j < end``; consecutive segments share their end points.
    """

    segments: tuple

    @property
    def min_slope(self) -> int | None:
        """Smallest slope, or ``None`` for a sequence of length one."""
        return min((s for _, _, s in self.segments), default=None)

    def to_json(self) -> dict:
        return {"segments": [list(s) for s in self.segments], "min_slope": self.min_slope}


def slope_profile(h1: Sequence[int]) -> SlopeProfile:
    seq = list(h1)
    slopes = [b - a for a, b in zip(seq, seq[1:])]
    segments = []
    start = 0
    for j in range(1, len(slopes) + 1):
        if j == len(slopes) or slopes[j] != slopes[start]:
            segments.append((start, j, slopes[start]))
            start = j
    return SlopeProfile(tuple(segments))
