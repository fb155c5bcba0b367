"""Homology surface bundles: algebraic monodromy, mapping tori, power covers.

A rational-homology product cobordism composed with a gluing matrix gives
an algebraic monodromy Y*X in SL(Q); its characteristic polynomial is the
torsion polynomial of the fiber class of the glued-up bundle.  For torus
fibers this is checked end to end: the mapping-torus presentation is built
group-theoretically, run through the Fox-calculus torsion pipeline, and the
result compared exactly against det(monodromy - tI).  Power covers replace
the monodromy by its n-th power; the induced n-th-power map on roots is
verified exactly through a Sylvester-matrix resultant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .freegroup import Word
from .laurent import (
    LaurentPoly,
    cauchy_root_radius,
    complex_roots,
    determinant,
    normalize,
    reciprocal,
)
from .presentation import FinitePresentation
from .torsion import specialize_jacobian, torsion_polynomial

CANDIDATE_SEARCH_CAP = 10**7

Matrix = list[list[Fraction]]


def _det_rational(rows) -> Fraction:
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def _as_matrix(rows, beta: int) -> tuple[tuple[Fraction, ...], ...]:
    m = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(m) != beta or any(len(row) != beta for row in m):
        raise ValueError(f"expected a {beta}x{beta} matrix")
    return m


@dataclass(frozen=True)
class HomologyBundleData:
    """First-homology data of a rational-homology F x I with a gluing.

    ``x`` is the rational matrix of the through-the-cobordism composition
    (det 1 exactly), ``y`` the integral matrix of the gluing (det 1).
    """

    beta: int
    x: tuple[tuple[Fraction, ...], ...]
    y: tuple[tuple[Fraction, ...], ...]

    def __init__(self, beta: int, x, y):
        if beta < 1:
            raise ValueError("beta must be a positive integer")
        object.__setattr__(self, "beta", int(beta))
        object.__setattr__(self, "x", _as_matrix(x, beta))
        object.__setattr__(self, "y", _as_matrix(y, beta))
        if _det_rational(self.x) != 1:
            raise ValueError("x must have determinant 1")
        if _det_rational(self.y) != 1:
            raise ValueError("y must have determinant 1")
        if any(v.denominator != 1 for row in self.y for v in row):
            raise ValueError("y must be integral")


@dataclass(frozen=True)
class AlgebraicMonodromy:
    """The composition matrix Y * X; determinant 1 by construction."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __init__(self, matrix):
        m = _as_matrix(matrix, len(matrix))
        if _det_rational(m) != 1:
            raise ValueError("monodromy must have determinant 1")
        object.__setattr__(self, "matrix", m)

    @property
    def beta(self) -> int:
        return len(self.matrix)


def monodromy(data: HomologyBundleData) -> AlgebraicMonodromy:
    """Exact product Y * X."""
    b = data.beta
    prod = [
        [sum(data.y[i][k] * data.x[k][j] for k in range(b)) for j in range(b)]
        for i in range(b)
    ]
    return AlgebraicMonodromy(prod)


def charpoly(phi) -> LaurentPoly:
    """Monic characteristic polynomial det(phi - tI) * (-1)^beta.

    Degree beta with constant term +/-1 (determinant 1).  Rational entries
    are kept exact, so coefficient denominators reflect those of phi.
    """
    rows = phi.matrix if isinstance(phi, AlgebraicMonodromy) else _as_matrix(phi, len(phi))
    beta = len(rows)
    t = LaurentPoly.t()
    m = [
        [
            LaurentPoly.constant(rows[i][j]) - (t if i == j else LaurentPoly.zero())
            for j in range(beta)
        ]
        for i in range(beta)
    ]
    p = determinant(m)
    if beta % 2:
        p = -p
    return p


def _power_word(gen: int, k: int) -> Word:
    return Word([(1 if k > 0 else -1) * (gen + 1)] * abs(k))


def mapping_torus_presentation(a) -> tuple[FinitePresentation, tuple[int, int, int]]:
    """Torus-bundle group for a monodromy in SL2(Z), with its fiber map to Z.

    Generators (a, b, s); relators [a,b] and s g s^-1 * phi(g)^-1 with the
    column-action convention phi(a) = a^A11 * b^A21, phi(b) = a^A12 * b^A22.
    The returned epimorphism sends only s to 1 (intersection with the fiber
    class).
    """
    m = [[int(x) for x in row] for row in a]
    if len(m) != 2 or any(len(r) != 2 for r in m):
        raise ValueError("expected a 2x2 matrix")
    if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1:
        raise ValueError("monodromy must have determinant 1")
    ga, gb, gs = Word([1]), Word([2]), Word([3])
    commutator = ga * gb * ~ga * ~gb
    phi_a = _power_word(0, m[0][0]) * _power_word(1, m[1][0])
    phi_b = _power_word(0, m[0][1]) * _power_word(1, m[1][1])
    rel_a = gs * ga * ~gs * ~phi_a
    rel_b = gs * gb * ~gs * ~phi_b
    pres = FinitePresentation(("a", "b", "s"), (commutator, rel_a, rel_b))
    return pres, (0, 0, 1)


@dataclass(frozen=True)
class MonodromyTorsionReport:
    """Cross-check of the Fox pipeline against det(phi - tI) for a torus bundle."""

    matrix: tuple[tuple[int, ...], ...]
    torsion: LaurentPoly
    characteristic: LaurentPoly
    ok: bool


def verify_monodromy_torsion(a) -> MonodromyTorsionReport:
    """Torsion polynomial of the mapping torus vs characteristic polynomial.

    Both are computed independently (Fox calculus + minor GCD on one side,
    a 2x2 determinant on the other) and compared exactly after
    normalization.
    """
    pres, psi = mapping_torus_presentation(a)
    delta = torsion_polynomial(specialize_jacobian(pres, psi))
    cp = charpoly([[Fraction(x) for x in row] for row in a])
    ok = normalize(delta) == normalize(cp)
    mat = tuple(tuple(int(x) for x in row) for row in a)
    return MonodromyTorsionReport(mat, delta, cp, ok)


def _mat_int_mul(x, y):
    return [
        [sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))]
        for i in range(len(x))
    ]


def _mat_int_pow(a, n: int):
    out = [[int(i == j) for j in range(len(a))] for i in range(len(a))]
    base = [list(r) for r in a]
    while n:
        if n & 1:
            out = _mat_int_mul(out, base)
        base = _mat_int_mul(base, base)
        n >>= 1
    return out


def _resultant_power(p: LaurentPoly, n: int) -> LaurentPoly:
    """Resultant_lambda(p(lambda), lambda^n - t): the monic-up-to-units
    polynomial in t whose roots are the n-th powers of the roots of p."""
    cs = p.dense()
    dp = len(cs) - 1
    # Sylvester matrix of p (degree dp in lambda, constant coefficients) and
    # lambda^n - t (degree n in lambda, coefficients in Q[t]), both descending.
    p_desc = [LaurentPoly.constant(c) for c in reversed(cs)]
    g_desc = [LaurentPoly.zero()] * (n + 1)
    g_desc[0] = LaurentPoly.one()
    g_desc[n] = -LaurentPoly.t()
    size = dp + n
    rows = []
    for i in range(n):
        row = [LaurentPoly.zero()] * size
        row[i : i + dp + 1] = p_desc
        rows.append(row)
    for i in range(dp):
        row = [LaurentPoly.zero()] * size
        row[i : i + n + 1] = g_desc
        rows.append(row)
    return determinant(rows)


@dataclass(frozen=True)
class PowerCoverReport:
    """Root-power check: charpoly(A^n) against {root^n of charpoly(A)}."""

    matrix: tuple[tuple[int, ...], ...]
    n: int
    base: LaurentPoly
    power: LaurentPoly
    composed: LaurentPoly
    exact_ok: bool
    numeric_ok: bool
    ok: bool


def power_cover(a, n: int, tol: float = 1e-10) -> PowerCoverReport:
    """Verify that the roots of charpoly(A^n) are the n-th powers of the
    roots of charpoly(A), exactly via the resultant identity and
    numerically within ``tol``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = [[int(x) for x in row] for row in a]
    if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1:
        raise ValueError("monodromy must have determinant 1")
    base = charpoly([[Fraction(x) for x in row] for row in m])
    power = charpoly([[Fraction(x) for x in row] for row in _mat_int_pow(m, n)])
    composed = _resultant_power(base, n)
    exact_ok = normalize(composed) == normalize(power)
    powered = sorted(
        (z ** n for z, mult in complex_roots(base, tol) for _ in range(mult)),
        key=lambda w: (w.real, w.imag),
    )
    direct = sorted(
        (z for z, mult in complex_roots(power, tol) for _ in range(mult)),
        key=lambda w: (w.real, w.imag),
    )
    numeric_ok = len(powered) == len(direct) and all(
        abs(u - v) <= tol ** 0.5 * max(1.0, abs(v)) for u, v in zip(powered, direct)
    )
    mat = tuple(tuple(row) for row in m)
    return PowerCoverReport(mat, n, base, power, composed, exact_ok, numeric_ok,
                            exact_ok and numeric_ok)


def enumerate_candidate_charpolys(beta: int, n_denominator: int, c) -> list[LaurentPoly]:
    """All monic degree-beta candidates compatible with the root annulus.

    Coefficients have denominators dividing n_denominator**beta, constant
    term +/-1, elementary-symmetric magnitude bounds C(beta,k)*c^k, and all
    roots of modulus within [1/c, c].  The upper and lower root conditions
    are accepted by the exact Cauchy certificate when it applies and by
    high-precision numerics otherwise.  Output is duplicate-free, sorted by
    coefficient tuple, and closed under the reciprocal map.
    """
    if not (1 <= beta <= 4):
        raise ValueError("beta must be between 1 and 4")
    c = Fraction(c)
    if c < 1:
        raise ValueError("c must be >= 1")
    if n_denominator < 1:
        raise ValueError("denominator bound must be >= 1")
    denom = n_denominator ** beta
    ranges = []
    volume = 2
    for j in range(1, beta):
        k = beta - j  # coefficient of t^j is +/- e_k up to sign
        top = math.floor(math.comb(beta, k) * c ** k * denom)
        ranges.append(range(-top, top + 1))
        volume *= 2 * top + 1
    if volume > CANDIDATE_SEARCH_CAP:
        raise ValueError(f"candidate search volume {volume} exceeds cap")
    inv_c = 1 / c
    margin = 10 * 1e-10
    found = set()
    for const in (1, -1):
        for nums in itertools.product(*ranges):
            coeffs = {beta: Fraction(1), 0: Fraction(const)}
            for j, num in zip(range(1, beta), nums):
                if num:
                    coeffs[j] = Fraction(num, denom)
            p = LaurentPoly(coeffs)
            if cauchy_root_radius(p) <= c and cauchy_root_radius(reciprocal(p)) <= c:
                found.add(p)
                continue
            mods = [abs(z) for z, _ in complex_roots(p, 1e-10)]
            if min(mods) >= float(inv_c) - margin and max(mods) <= float(c) + margin:
                found.add(p)
    return sorted(found, key=lambda p: tuple(p.dense()))
