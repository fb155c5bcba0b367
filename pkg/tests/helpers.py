"""Shared generators and brute-force oracles for the test suite."""

import itertools
import math

from torsionpoly.freegroup import Word
from torsionpoly.presentation import FinitePresentation, exponent_sum_matrix
from torsionpoly.sl2z import mat_mul


def random_word(rng, num_gens, max_len):
    letters = [
        rng.choice([1, -1]) * rng.randint(1, num_gens)
        for _ in range(rng.randint(1, max_len))
    ]
    return Word(letters)


def random_presentation(rng, max_gens=3, max_relators=3, max_len=12):
    """A random presentation with nonempty freely reduced relators."""
    m = rng.randint(1, max_gens)
    names = tuple("abcdefgh"[:m])
    relators = []
    for _ in range(rng.randint(1, max_relators)):
        w = random_word(rng, m, max_len)
        if w:
            relators.append(w)
    return FinitePresentation(names, tuple(relators))


def brute_force_epimorphisms(pres, bound):
    """Box enumeration of primitive kernel vectors, one per +/- pair."""
    rows = exponent_sum_matrix(pres)
    m = pres.num_generators
    out = set()
    for v in itertools.product(range(-bound, bound + 1), repeat=m):
        if not any(v):
            continue
        if any(sum(a * b for a, b in zip(row, v)) for row in rows):
            continue
        g = 0
        for x in v:
            g = math.gcd(g, abs(x))
        if g != 1:
            continue
        first = next(x for x in v if x)
        out.add(tuple(-x for x in v) if first < 0 else v)
    return sorted(out)


_R = ((1, 1), (0, 1))
_L = ((1, 0), (1, 1))
_RINV = ((1, -1), (0, 1))
_LINV = ((1, 0), (-1, 1))


def random_sl2z_matrix(rng, entry_bound=10):
    """Random determinant-1 integer matrix with entries within the bound,
    built as a product of elementary matrices (and an optional global sign)."""
    m = ((1, 0), (0, 1))
    for _ in range(rng.randint(0, 12)):
        g = rng.choice([_R, _L, _RINV, _LINV])
        nxt = mat_mul(m, g)
        if max(abs(v) for row in nxt for v in row) > entry_bound:
            break
        m = nxt
    if rng.random() < 0.5:
        m = tuple(tuple(-v for v in row) for row in m)
    return [list(row) for row in m]
