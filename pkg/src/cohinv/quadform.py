"""Exact symmetric-congruence diagonalization over Q and the Stiefel-Whitney
classes of the resulting diagonal forms, as graded mod-2 cohomology classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import factorint as fi
from .errors import DegenerateForm, IndexOutOfRange
from .kcohomology import BASE_Q, GradedClass, Symbol, _combine_entries


@dataclass(frozen=True)
class SymmetricForm:
    """A quadratic form given by its symmetric Gram matrix over Q."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows) -> "SymmetricForm":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class DiagonalForm:
    """Diagonal entries of a congruent diagonal Gram matrix; all nonzero."""

    entries: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.entries)


def block_sum(a: SymmetricForm, b: SymmetricForm) -> SymmetricForm:
    n, m = a.dim, b.dim
    zero = Fraction(0)
    rows = [tuple(a.rows[i]) + (zero,) * m for i in range(n)]
    rows += [(zero,) * n + tuple(b.rows[i]) for i in range(m)]
    return SymmetricForm(tuple(rows))


def diagonalize(q: SymmetricForm) -> DiagonalForm:
    """Symmetric Gaussian elimination with pivoting.

    Prefers a nonzero diagonal pivot (brought up by a symmetric swap); when
    the working block has an all-zero diagonal, row+column j is added to
    row+column i at some nonzero G[i][j], which makes the pivot 2*G[i][j].
    A working block with zero first row has zero determinant, so the form is
    degenerate.
    """
    n = q.dim
    g = [[Fraction(x) for x in row] for row in q.rows]
    entries = []
    for i in range(n):
        if g[i][i] == 0:
            k = next((j for j in range(i + 1, n) if g[j][j] != 0), None)
            if k is not None:
                g[i], g[k] = g[k], g[i]
                for row in g:
                    row[i], row[k] = row[k], row[i]
            else:
                j = next((j for j in range(i + 1, n) if g[i][j] != 0), None)
                if j is None:
                    raise DegenerateForm("determinant is zero")
                for col in range(n):
                    g[i][col] += g[j][col]
                for row in g:
                    row[i] += row[j]
        d = g[i][i]
        entries.append(d)
        for r in range(i + 1, n):
            f = g[r][i] / d
            if f:
                for col in range(i, n):
                    g[r][col] -= f * g[i][col]
                for row in range(i, n):
                    g[row][r] -= f * g[row][i]
    return DiagonalForm(tuple(entries))


def sw_class(i: int, d: DiagonalForm) -> GradedClass:
    """The i-th Stiefel-Whitney class: the elementary symmetric polynomial of
    degree i in the square classes of the diagonal entries, in the symbol ring.
    Subsets are enumerated directly."""
    n = d.dim
    if i < 0 or i > n:
        raise IndexOutOfRange(f"degree {i} outside 0..{n}")
    if i == 0:
        return GradedClass.one(BASE_Q)
    reps = [fi.partial_squarefree(x) for x in d.entries]
    acc: set[Symbol] = set()
    for subset in combinations(range(n), i):
        s = _combine_entries([reps[j] for j in subset], BASE_Q)
        if s is not None:
            acc.symmetric_difference_update({s})
    return GradedClass(BASE_Q, {i: frozenset(acc)} if acc else {})


def sw_total(d: DiagonalForm) -> GradedClass:
    out = GradedClass.one(BASE_Q)
    for i in range(1, d.dim + 1):
        out = out + sw_class(i, d)
    return out


def matrix_det(rows) -> Fraction:
    """Determinant of a square rational matrix by fraction-free-enough
    Gaussian elimination (exact Fractions, partial pivoting)."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        inv = 1 / m[i][i]
        for r in range(i + 1, n):
            if m[r][i]:
                f = m[r][i] * inv
                for c in range(i, n):
                    m[r][c] -= f * m[i][c]
    return det
