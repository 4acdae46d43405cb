"""Strong Lefschetz machinery with exact ranks.

All verdicts come from exact ranks of multiplication maps between graded
pieces of a :class:`~revgin.groebner.QuotientAlgebra`.  Positive verdicts
carry a verified witness.  Negative verdicts from random search only say that
no witness was found; :func:`determinant_vanishes_identically` gives a
certified negative for square maps.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DomainError, ShapeError
from .groebner import IdealGens, MonomialIdeal, QuotientAlgebra, buchberger
from .linalg import det, matmul, rank
from .poly import LinearForm, Polynomial

DEFAULT_TRIALS = 20
DEFAULT_BOUND = 50
DEFAULT_BRANCH = 2


def multiplication_matrix(Q: QuotientAlgebra, ell: LinearForm, i: int, s: int) -> list[list[Fraction]]:
    """Matrix of ``f -> ell^s * f`` from ``A_i`` to ``A_{i+s}``.

    Rows follow the standard monomial basis of ``A_{i+s}``, columns that of
    ``A_i``, both in descending revlex.
    """
    src, dst = Q.basis(i), Q.basis(i + s)
    index = Q.index(i + s)
    power = ell.to_polynomial() ** s
    M = [[Fraction(0)] * len(src) for _ in dst]
    for col, m in enumerate(src):
        image = Q.reduce(power * Polynomial.monomial(m))
        for mono, c in image.terms:
            M[index[mono]][col] = c
    return M


def _step_matrices(Q: QuotientAlgebra, ell: LinearForm) -> list[list[list[int]]]:
    """Integer multiples of the maps ``x ell: A_d -> A_{d+1}``, one per degree."""
    steps = []
    for d in range(Q.socle_degree):
        src, index = Q.basis(d), Q.index(d + 1)
        M = [[Fraction(0)] * len(src) for _ in range(len(Q.basis(d + 1)))]
        for col, m in enumerate(src):
            for k, c in enumerate(ell.coefficients):
                if not c:
                    continue
                u = tuple(e + (j == k) for j, e in enumerate(m))
                for mono, v in Q.nf_monomial(u).items():
                    M[index[mono]][col] += c * v
        den = 1
        for row in M:
            for x in row:
                den = lcm(den, x.denominator)
        steps.append([[int(x * den) for x in row] for row in M])
    return steps


def rank_table(Q: QuotientAlgebra, ell: LinearForm) -> dict:
    """``{(i, s): rank of x ell^s: A_i -> A_{i+s}}`` for ``s >= 1``."""
    steps = _step_matrices(Q, ell)
    c = Q.socle_degree
    table = {}
    for i in range(c):
        P = steps[i]
        table[(i, 1)] = rank(P)
        for s in range(2, c - i + 1):
            P = matmul(steps[i + s - 1], P)
            table[(i, s)] = rank(P)
    return table


@dataclass(frozen=True)
class SlpCheck:
    holds: bool
    failing_map: tuple | None = None

    def __bool__(self):
        return self.holds


def has_slp_with(Q: QuotientAlgebra, ell: LinearForm) -> SlpCheck:
    """Is every ``x ell^s: A_i -> A_{i+s}`` of full rank?

    On failure ``failing_map`` is ``(i, s, rank, expected_rank)`` for the
    first failing map in ``(i, s)`` order.
    """
    if ell.n != Q.n:
        raise DomainError("linear form and algebra have different variable counts")
    h = Q.hilbert()
    steps = _step_matrices(Q, ell)
    c = Q.socle_degree
    for i in range(c):
        P = steps[i]
        for s in range(1, c - i + 1):
            if s > 1:
                P = matmul(steps[i + s - 1], P)
            r = rank(P)
            want = min(h[i], h[i + s])
            if r != want:
                return SlpCheck(False, (i, s, r, want))
    return SlpCheck(True)


@dataclass(frozen=True)
class SlpVerdict:
    holds: bool
    witness: tuple = ()
    trials: int = 0
    failing_map: tuple | None = None
    level: int | None = None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": [g.to_json() for g in self.witness],
            "trials": self.trials,
            "failing_map": list(self.failing_map) if self.failing_map else None,
            "level": self.level,
        }


def _candidates(n: int, seed, bound: int):
    yield LinearForm.variable(n - 1, n)
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(n)]
        if any(coeffs):
            yield LinearForm(tuple(coeffs))


def find_slp_witness(
    Q: QuotientAlgebra, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_BOUND
) -> SlpVerdict:
    """Search for a Lefschetz element: ``x_n`` first, then random integer forms.

    ``trials`` counts all candidates, ``x_n`` included.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    last = None
    for t, ell in enumerate(itertools.islice(_candidates(Q.n, seed, bound), trials), start=1):
        check = has_slp_with(Q, ell)
        if check:
            return SlpVerdict(True, (ell,), t)
        last = check.failing_map
    return SlpVerdict(False, (), trials, last, 1)


def quotient_by_linear_form(Q: QuotientAlgebra, g: LinearForm) -> QuotientAlgebra:
    """``Q / (g)``, recomputed from scratch with Buchberger."""
    gens = tuple(Q.gb.elements) + (g.to_polynomial(),)
    return QuotientAlgebra(buchberger(IdealGens(Q.n, gens)))


def has_k_slp(
    Q: QuotientAlgebra,
    k: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    branch: int = DEFAULT_BRANCH,
) -> SlpVerdict:
    """Search for a chain ``g_1, ..., g_k`` witnessing the k-SLP.

    At each level up to ``trials`` candidates are examined; at most
    ``branch`` Lefschetz candidates per level are followed into the
    recursion before giving up.
    """
    if not 1 <= k <= Q.n:
        raise DomainError(f"k must lie in 1..{Q.n}")
    return _k_slp(Q, k, trials, str(seed), bound, branch, level=1)


def _k_slp(Q, k, trials, seed, bound, branch, level):
    followed = 0
    examined = 0
    failure = None
    fail_level = level
    for idx, ell in enumerate(itertools.islice(_candidates(Q.n, seed, bound), trials)):
        examined += 1
        check = has_slp_with(Q, ell)
        if not check:
            if failure is None or fail_level == level:
                failure, fail_level = check.failing_map, level
            continue
        if k == 1:
            return SlpVerdict(True, (ell,), examined, None, None)
        sub = _k_slp(
            quotient_by_linear_form(Q, ell), k - 1, trials, f"{seed}/{idx}", bound, branch, level + 1
        )
        if sub.holds:
            return SlpVerdict(True, (ell,) + sub.witness, examined + sub.trials)
        failure, fail_level = sub.failing_map, sub.level
        examined += sub.trials
        followed += 1
        if followed >= branch:
            break
    return SlpVerdict(False, (), examined, failure, fail_level)


# --- basic invariants -----------------------------------------------------------


@dataclass(frozen=True)
class BasicInvariants:
    """Multiset of ``(b, a)``: a Jordan block of length ``a`` starting in degree ``b``."""

    pairs: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(tuple(p) for p in self.pairs)))

    def hilbert_series(self) -> tuple:
        """Coefficients of ``sum lambda^b (1 - lambda^a) / (1 - lambda)``."""
        top = max((b + a for b, a in self.pairs), default=0)
        out = [0] * top
        for b, a in self.pairs:
            for d in range(b, b + a):
                out[d] += 1
        return tuple(out)

    def quotient_series(self) -> tuple:
        """Coefficients of ``sum lambda^b``."""
        top = max((b + 1 for b, _ in self.pairs), default=0)
        out = [0] * top
        for b, _ in self.pairs:
            out[b] += 1
        return tuple(out)

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}


def jordan_type(Q: QuotientAlgebra, g: LinearForm) -> BasicInvariants:
    """Graded Jordan type of multiplication by ``g``, read off the rank table.

    With ``r(i, s)`` the rank of ``x g^s: A_i -> A_{i+s}`` (``r(i, 0) = h_i``),
    ``r(i, s)`` counts blocks meeting both degree ``i`` and ``i + s``, so the
    number of blocks starting at ``i`` of length exactly ``s + 1`` is
    ``r(i,s) - r(i-1,s+1) - r(i,s+1) + r(i-1,s+2)``.
    """
    if g.is_zero():
        raise DomainError("zero linear form")
    h = Q.hilbert()
    c = Q.socle_degree
    table = rank_table(Q, g)

    def r(i, s):
        if i < 0 or i + s > c:
            return 0
        if s == 0:
            return h[i]
        return table[(i, s)]

    pairs = []
    for i in range(c + 1):
        for s in range(0, c - i + 1):
            count = r(i, s) - r(i - 1, s + 1) - r(i, s + 1) + r(i - 1, s + 2)
            if count < 0:
                raise AssertionError(f"negative block count at ({i}, {s})")
            pairs.extend([(i, s + 1)] * count)
    return BasicInvariants(tuple(pairs))


def slp_from_basic_invariants(inv: BasicInvariants) -> bool:
    """Blocks starting earlier must end no earlier."""
    for (b1, a1), (b2, a2) in itertools.combinations(inv.pairs, 2):
        if b1 < b2 and b1 + a1 < b2 + a2:
            return False
        if b2 < b1 and b2 + a2 < b1 + a1:
            return False
    return True


def check_c1_prime(inv: BasicInvariants) -> bool:
    return all(
        abs(a1 - a2) <= 1
        for (b1, a1), (b2, a2) in itertools.combinations(inv.pairs, 2)
        if b1 == b2
    )


def check_c2_prime(inv: BasicInvariants) -> bool:
    return all(
        abs(b1 - b2) <= 1
        for (b1, a1), (b2, a2) in itertools.combinations(inv.pairs, 2)
        if b1 + a1 == b2 + a2
    )


def tensor_basic_invariants(inv: BasicInvariants) -> BasicInvariants:
    """Blocks of ``(A (x) K[y]/(y^2), g + y)`` from those of ``(A, g)``."""
    out = []
    for b, a in inv.pairs:
        out.append((b, a + 1))
        if a > 1:
            out.append((b + 1, a - 1))
    return BasicInvariants(tuple(out))


def tensor_with_dual_number(I: IdealGens | MonomialIdeal) -> IdealGens:
    """Generators of ``I`` in one more variable ``y`` (last), plus ``y^2``."""
    if isinstance(I, MonomialIdeal):
        I = I.as_ideal_gens()
    n = I.n
    lifted = tuple(
        Polynomial(n + 1, {m + (0,): c for m, c in g.terms}) for g in I.generators
    )
    y2 = Polynomial.monomial((0,) * n + (2,))
    return IdealGens(n + 1, lifted + (y2,))


# --- certified negatives ------------------------------------------------------


@dataclass(frozen=True)
class CertifiedNoSlp:
    map_degrees: tuple
    grid_bound: int
    certified: bool
    evaluations: int = 0
    nonvanishing_point: tuple | None = None

    def to_json(self) -> dict:
        return {
            "map_degrees": list(self.map_degrees),
            "grid_bound": self.grid_bound,
            "certified": self.certified,
            "evaluations": self.evaluations,
            "nonvanishing_point": list(self.nonvanishing_point) if self.nonvanishing_point else None,
        }


def determinant_degree_bound(Q: QuotientAlgebra, i: int, s: int) -> int:
    """Per-parameter degree bound of ``det(x ell^s: A_i -> A_{i+s})``.

    Every entry is a form of degree ``s`` in the coefficients of ``ell``.
    """
    return s * len(Q.basis(i))


def determinant_vanishes_identically(
    Q: QuotientAlgebra,
    i: int,
    s: int,
    param_count: int | None = None,
    degree_bound: int | None = None,
) -> CertifiedNoSlp:
    """Decide whether ``det(x ell^s: A_i -> A_{i+s})`` vanishes for every ``ell``.

    The determinant is a polynomial in the coefficients of ``ell`` of degree at
    most ``degree_bound`` in each of them; vanishing on the grid
    ``{1, ..., degree_bound + 1}^param_count`` therefore proves it is zero.
    """
    if param_count is None:
        param_count = Q.n
    if param_count != Q.n:
        raise DomainError("one parameter per variable is required")
    if len(Q.basis(i)) != len(Q.basis(i + s)):
        raise ShapeError(f"map A_{i} -> A_{i + s} is not square")
    if degree_bound is None:
        degree_bound = determinant_degree_bound(Q, i, s)
    side = degree_bound + 1
    count = 0
    for point in itertools.product(range(1, side + 1), repeat=param_count):
        count += 1
        if det(multiplication_matrix(Q, LinearForm(point), i, s)) != 0:
            return CertifiedNoSlp((i, s), side, False, count, point)
    return CertifiedNoSlp((i, s), side, True, count)


def lefschetz_chain_quotients(Q: QuotientAlgebra, chain: Sequence[LinearForm]) -> list[QuotientAlgebra]:
    """``[Q, Q/(g1), Q/(g1,g2), ...]`` for a witness chain."""
    out = [Q]
    for g in chain[:-1]:
        out.append(quotient_by_linear_form(out[-1], g))
    return out
