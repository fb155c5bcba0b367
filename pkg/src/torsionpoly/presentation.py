"""Finite group presentations: parsing, complexity, and epimorphisms to Z.

The text grammar (described in the README) is one ``gens:`` line followed
by ``rel:`` lines; a lowercase token is a generator, its first-character
uppercased form is the inverse, and ``name^k`` powers are expanded.  The
complexity of a presentation is the sum of the l1 norms of all Fox
derivatives of its relators; it feeds the root bound 1 + m! * k^m.  Neither
quantity is minimized over presentations, so the bound reported here is an
upper bound for the sharpest constant attached to the underlying group.
"""

from __future__ import annotations

import itertools
import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .freegroup import Word, fox_derivative, norm_l1

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*$")
_TOKEN_RE = re.compile(r"([A-Za-z][a-z0-9_]*)(?:\^(-?\d+))?$")

_ENUMERATION_CAP = 10**7


class PresentationError(ValueError):
    pass


class ParseError(PresentationError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class FinitePresentation:
    """Generators (distinct names) and freely reduced nonempty relators."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def __post_init__(self):
        if len(set(self.generator_names)) != len(self.generator_names):
            raise PresentationError("duplicate generator name")
        for r in self.relators:
            if not r:
                raise PresentationError("empty relator")
            if r.max_generator() >= len(self.generator_names):
                raise PresentationError("relator uses an undeclared generator")


def parse_presentation(text: str) -> FinitePresentation:
    """Parse the presentation grammar; see the module docstring.

    Relators that reduce to the identity are dropped with a warning.
    Raises :class:`ParseError` with line/column on malformed input.
    """
    names: list[str] | None = None
    index: dict[str, int] = {}
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        col0 = len(line) - len(stripped) + 1
        if stripped.startswith("gens:"):
            if names is not None:
                raise ParseError("duplicate gens line", lineno, col0)
            names = []
            body = stripped[len("gens:"):]
            for piece in body.split(","):
                name = piece.strip()
                if not name:
                    if body.strip():
                        raise ParseError("empty generator name", lineno, col0)
                    continue
                if not _NAME_RE.match(name):
                    raise ParseError(f"bad generator name {name!r}", lineno, line.index(name) + 1)
                if name in index:
                    raise ParseError(f"duplicate generator name {name!r}", lineno, line.index(name) + 1)
                index[name] = len(names)
                names.append(name)
        elif stripped.startswith("rel:"):
            letters: list[int] = []
            pos = col0 + len("rel:")
            for tok in stripped[len("rel:"):].split():
                col = line.index(tok, pos - 1) + 1
                pos = col + len(tok)
                m = _TOKEN_RE.match(tok)
                if not m:
                    raise ParseError(f"bad letter token {tok!r}", lineno, col)
                word, exp = m.group(1), m.group(2)
                if word[0].isupper():
                    name, sign = word[0].lower() + word[1:], -1
                else:
                    name, sign = word, 1
                if names is None or name not in index:
                    raise ParseError(f"unknown generator {name!r}", lineno, col)
                k = 1 if exp is None else int(exp)
                if k == 0:
                    raise ParseError("zero exponent", lineno, col)
                if k < 0:
                    sign, k = -sign, -k
                letters.extend([sign * (index[name] + 1)] * k)
            w = Word(letters)
            if w:
                relators.append(w)
            else:
                warnings.warn(f"relator on line {lineno} reduces to the identity; dropped")
        else:
            raise ParseError("expected 'gens:' or 'rel:' line", lineno, col0)
    if names is None:
        raise ParseError("missing gens line", 1, 1)
    return FinitePresentation(tuple(names), tuple(relators))


def serialize_presentation(pres: FinitePresentation) -> str:
    """Canonical text form; parses back to an equal presentation."""
    lines = ["gens: " + ", ".join(pres.generator_names)]
    for r in pres.relators:
        parts = []
        for a in r:
            name = pres.generator_names[abs(a) - 1]
            parts.append(name if a > 0 else name[0].upper() + name[1:])
        lines.append("rel: " + " ".join(parts))
    return "\n".join(lines) + "\n"


def exponent_sum_matrix(pres: FinitePresentation) -> list[list[int]]:
    """Integer matrix (relators x generators) of signed letter counts."""
    m = pres.num_generators
    out = []
    for r in pres.relators:
        row = [0] * m
        for a in r:
            row[abs(a) - 1] += 1 if a > 0 else -1
        out.append(row)
    return out


def validate_epimorphism(pres: FinitePresentation, values) -> str | None:
    """None if ``values`` defines an epimorphism to Z, else the reason.

    Valid means every relator has zero weighted exponent sum and the gcd of
    the entries is 1 (surjectivity).
    """
    v = list(values)
    if len(v) != pres.num_generators:
        raise ValueError(
            f"expected {pres.num_generators} values, got {len(v)}"
        )
    for i, row in enumerate(exponent_sum_matrix(pres)):
        if sum(a * b for a, b in zip(row, v)):
            return f"kills-relators violated at relator {i}"
    g = 0
    for a in v:
        g = math.gcd(g, abs(a))
    if g != 1:
        return f"not surjective (gcd = {g})"
    return None


def _kernel_basis(rows: list[list[int]], m: int) -> list[list[int]]:
    """Basis of the integer kernel lattice of a relators x generators matrix.

    Column reduction by Euclidean operations; the transform columns under
    the zeroed-out part of the echelon form span the kernel.
    """
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def col_sub(j, k, q):
        for r in a:
            r[j] -= q * r[k]
        for r in u:
            r[j] -= q * r[k]

    def col_swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in u:
            r[j], r[k] = r[k], r[j]

    lead = 0
    for i in range(len(a)):
        if lead == m:
            break
        while True:
            nz = [j for j in range(lead, m) if a[i][j]]
            if not nz:
                break
            if len(nz) == 1:
                col_swap(lead, nz[0])
                lead += 1
                break
            j0 = min(nz, key=lambda j: abs(a[i][j]))
            for j in nz:
                if j != j0:
                    col_sub(j, j0, a[i][j] // a[i][j0])
    return [[u[r][j] for r in range(m)] for j in range(lead, m)]


def _linf(vec) -> int:
    return max((abs(x) for x in vec), default=0)


def enumerate_epimorphisms(pres: FinitePresentation, bound: int) -> list[tuple[int, ...]]:
    """All epimorphisms to Z with sup-norm <= bound, one per +/- pair.

    Works in a basis of the kernel lattice of the exponent-sum matrix and
    filters by sup-norm in generator coordinates; representatives have a
    positive first nonzero entry and are sorted lexicographically.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    m = pres.num_generators
    basis = _kernel_basis(exponent_sum_matrix(pres), m)
    d = len(basis)
    if d == 0:
        return []
    # rigorous coefficient box: x = G^-1 B^T v, so |x|_inf <= |G^-1 B^T|_inf * bound
    gram = [
        [sum(basis[i][k] * basis[j][k] for k in range(m)) for j in range(d)]
        for i in range(d)
    ]
    ginv = _fraction_inverse(gram)
    gb = [
        [sum(ginv[i][k] * basis[k][j] for k in range(d)) for j in range(m)]
        for i in range(d)
    ]
    row_norm = max(sum(abs(x) for x in row) for row in gb)
    cbound = math.floor(row_norm * bound)
    if (2 * cbound + 1) ** d > _ENUMERATION_CAP:
        raise PresentationError("epimorphism enumeration box is too large")
    seen = set()
    for coeffs in itertools.product(range(-cbound, cbound + 1), repeat=d):
        v = tuple(
            sum(coeffs[i] * basis[i][j] for i in range(d)) for j in range(m)
        )
        if not any(v) or _linf(v) > bound:
            continue
        g = 0
        for x in v:
            g = math.gcd(g, abs(x))
        if g != 1:
            continue
        first = next(x for x in v if x)
        if first < 0:
            v = tuple(-x for x in v)
        seen.add(v)
    return sorted(seen)


def _fraction_inverse(mat: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of a small nonsingular integer matrix."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c])
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def complexity_k(pres: FinitePresentation) -> int:
    """Sum of the l1 norms of all Fox derivatives of the relators."""
    total = Fraction(0)
    for r in pres.relators:
        for j in range(pres.num_generators):
            total += norm_l1(fox_derivative(r, j))
    assert total.denominator == 1
    return int(total)


def root_bound_c(pres: FinitePresentation) -> Fraction:
    """The root-annulus constant 1 + m! * k^m for this presentation.

    An upper bound for the sharpest constant of the presented group, which
    would additionally minimize k and m over presentations.
    """
    m = pres.num_generators
    k = complexity_k(pres)
    return Fraction(1) + math.factorial(m) * Fraction(k) ** m
