"""Hyperbolic SL2(Z) conjugacy classes via positive R/L words.

Every hyperbolic class of trace > 2 has a representative that is a positive
word R^a1 L^b1 ... R^ak L^bk in R = [[1,1],[0,1]], L = [[1,0],[1,1]],
unique up to cyclic rotation of the block sequence; trace < -2 classes are
the negatives.  The enumeration is complete because the trace of a positive
word is at least (sum of a_i * b_i) + 2, so the block weights of a
trace-tau word are bounded by tau - 2.  That standard fact is not taken on
faith: a brute-force conjugation BFS acts as an independent oracle and the
test suite checks the two partitions agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Mat2 = tuple[tuple[int, int], tuple[int, int]]

R_MAT: Mat2 = ((1, 1), (0, 1))
L_MAT: Mat2 = ((1, 0), (1, 1))

SAME_CLASS = "same-class"
DISTINCT = "distinct"
INCONCLUSIVE = "inconclusive"


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def mat_pow(x: Mat2, n: int) -> Mat2:
    out: Mat2 = ((1, 0), (0, 1))
    base = x
    while n:
        if n & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        n >>= 1
    return out


def mat_inv(x: Mat2) -> Mat2:
    """Inverse of a determinant-1 matrix (adjugate)."""
    return ((x[1][1], -x[0][1]), (-x[1][0], x[0][0]))


def trace(x: Mat2) -> int:
    return x[0][0] + x[1][1]


def det(x: Mat2) -> int:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


@dataclass(frozen=True)
class RLWord:
    """A hyperbolic conjugacy class: sign * R^a1 L^b1 ... R^ak L^bk.

    Blocks are positive pairs; the canonical form is the lexicographically
    least cyclic rotation of the block sequence.
    """

    blocks: tuple[tuple[int, int], ...]
    sign: int = 1

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("an R/L word needs at least one block")
        if any(a < 1 or b < 1 for a, b in self.blocks):
            raise ValueError("block exponents must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def weight(self) -> int:
        return sum(a * b for a, b in self.blocks)

    def display(self) -> str:
        body = " ".join(
            (f"R^{a}" if a > 1 else "R") + " " + (f"L^{b}" if b > 1 else "L")
            for a, b in self.blocks
        )
        return body if self.sign == 1 else f"-({body})"


def rl_to_matrix(word: RLWord) -> Mat2:
    """sign * product of R^a L^b blocks; determinant 1."""
    out: Mat2 = ((1, 0), (0, 1))
    for a, b in word.blocks:
        out = mat_mul(out, mat_mul(mat_pow(R_MAT, a), mat_pow(L_MAT, b)))
    if word.sign < 0:
        out = ((-out[0][0], -out[0][1]), (-out[1][0], -out[1][1]))
    return out


def canonicalize(word: RLWord) -> RLWord:
    """Lexicographically least cyclic rotation of the blocks; idempotent."""
    k = len(word.blocks)
    best = min(word.blocks[i:] + word.blocks[:i] for i in range(k))
    return RLWord(best, word.sign)


def inverse_class(word: RLWord) -> RLWord:
    """Canonical word of the inverse matrix's class.

    M^-1 is conjugate to M^T (by [[0,1],[-1,0]]), and transposition reverses
    the block sequence while swapping each (a, b).
    """
    swapped = tuple((b, a) for a, b in reversed(word.blocks))
    return canonicalize(RLWord(swapped, word.sign))


def _positive_words_by_trace(tau_max: int) -> dict[int, set[RLWord]]:
    """Canonical positive words bucketed by trace, for all traces <= tau_max.

    One depth-first sweep; appending a block strictly increases the trace
    and the trace of a word is monotone in each block exponent, so both the
    recursion and the exponent loops cut off exactly.
    """
    buckets: dict[int, set[RLWord]] = {}

    def extend(blocks, matrix):
        (p00, p01), (p10, p11) = matrix
        a = 1
        while p00 * (1 + a) + p01 + p10 * a + p11 <= tau_max:
            b = 1
            while True:
                tr = p00 * (1 + a * b) + p01 * b + p10 * a + p11
                if tr > tau_max:
                    break
                grown = blocks + ((a, b),)
                word = canonicalize(RLWord(grown, 1))
                assert word.weight() <= tr - 2
                buckets.setdefault(tr, set()).add(word)
                if tr < tau_max:
                    block = mat_mul(mat_pow(R_MAT, a), mat_pow(L_MAT, b))
                    extend(grown, mat_mul(matrix, block))
                b += 1
            a += 1

    extend((), ((1, 0), (0, 1)))
    return buckets


def classes_with_trace(tau: int) -> list[RLWord]:
    """All hyperbolic conjugacy classes of a given trace, as canonical words.

    Complete by the weight bound: a positive word of trace tau has total
    block weight at most tau - 2 (asserted on every hit).
    """
    if abs(tau) <= 2:
        raise ValueError(f"trace {tau} is not hyperbolic")
    if tau < 0:
        return [RLWord(w.blocks, -1) for w in classes_with_trace(-tau)]
    found = _positive_words_by_trace(tau).get(tau, set())
    return sorted(found, key=lambda w: w.blocks)


def _bounded_orbit(start: Mat2, bound: int) -> dict[Mat2, Mat2]:
    """Conjugates reachable from ``start`` through matrices with entries
    bounded by ``bound`` in absolute value, conjugating by R, L and
    inverses.  Maps each reached matrix m to a conjugator g with
    g * start * g^-1 == m."""
    gens = [R_MAT, L_MAT, mat_inv(R_MAT), mat_inv(L_MAT)]
    seen: dict[Mat2, Mat2] = {start: ((1, 0), (0, 1))}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                cand = mat_mul(g, mat_mul(m, mat_inv(g)))
                if cand in seen:
                    continue
                if max(abs(v) for row in cand for v in row) > bound:
                    continue
                seen[cand] = mat_mul(g, seen[m])
                nxt.append(cand)
        frontier = nxt
    return seen


def conjugacy_oracle(a: Mat2, b: Mat2, bound: int) -> str:
    """Brute-force conjugacy test restricted to entries <= bound.

    Trace is an exact class invariant, and a same-class verdict is backed
    by an explicit conjugator found by BFS (checked before returning).
    Disjoint completed bounded orbits are reported as distinct; the verdict
    is inconclusive when an input matrix already violates the bound,
    leaving no room to explore.
    """
    a = tuple(tuple(int(v) for v in row) for row in a)
    b = tuple(tuple(int(v) for v in row) for row in b)
    if trace(a) != trace(b) or det(a) != det(b):
        return DISTINCT
    if a == b:
        return SAME_CLASS
    if max(abs(v) for row in a for v in row) > bound or \
       max(abs(v) for row in b for v in row) > bound:
        return INCONCLUSIVE
    for start, target in ((a, b), (b, a)):
        orbit = _bounded_orbit(start, bound)
        if target in orbit:
            g = orbit[target]
            assert mat_mul(g, mat_mul(start, mat_inv(g))) == target
            return SAME_CLASS
    return DISTINCT


def sol_candidates(c) -> list[tuple[int, list[RLWord]]]:
    """Hyperbolic monodromy classes compatible with a root bound c >= 1.

    Both roots of t^2 - tau*t + 1 lie in the annulus [1/c, c] only if
    |tau| <= c + 1/c, so the census covers exactly those traces; an empty
    list results when c + 1/c <= 2 admits no hyperbolic trace.
    """
    c = Fraction(c)
    if c < 1:
        raise ValueError("c must be >= 1")
    top = math.floor(c + 1 / c)
    if top < 3:
        return []
    buckets = _positive_words_by_trace(top)
    out = []
    for tau in range(3, top + 1):
        pos = sorted(buckets.get(tau, set()), key=lambda w: w.blocks)
        out.append((tau, pos))
        out.append((-tau, [RLWord(w.blocks, -1) for w in pos]))
    return out
