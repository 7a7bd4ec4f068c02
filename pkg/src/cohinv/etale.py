"""Etale algebras over Q as products of squarefree quotient algebras, their
trace Gram matrices, and the graded invariants of the trace form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .errors import IndexOutOfRange, NotEtale
from .kcohomology import GradedClass
from .quadform import DiagonalForm, SymmetricForm, block_sum, diagonalize, sw_class


@dataclass(frozen=True)
class EtaleAlgebra:
    """A product of Q[x]/(f_j) with every f_j monic squarefree of degree >= 1."""

    factors: tuple[upoly.Poly, ...]

    def __post_init__(self):
        if not self.factors:
            raise NotEtale("an etale algebra needs at least one factor")
        for f in self.factors:
            if upoly.degree(f) < 1 or f[-1] != 1 or not upoly.is_squarefree(f):
                raise NotEtale(f"factor {f} is not monic squarefree of degree >= 1")

    @classmethod
    def from_polys(cls, polys) -> "EtaleAlgebra":
        normalized = []
        for raw in polys:
            f = upoly.poly(raw)
            if not f:
                raise NotEtale("the zero polynomial defines no quotient algebra")
            normalized.append(upoly.monic(f))
        return cls(tuple(normalized))

    @property
    def total_degree(self) -> int:
        return sum(upoly.degree(f) for f in self.factors)


def is_etale(polys) -> bool:
    """True iff every factor is squarefree and nonconstant after monic
    normalization, and there is at least one factor."""
    items = list(polys)
    if not items:
        return False
    for raw in items:
        f = upoly.poly(raw)
        if not f or upoly.degree(f) < 1:
            return False
        if not upoly.is_squarefree(upoly.monic(f)):
            return False
    return True


def _power_sums(f: upoly.Poly, count: int) -> list[Fraction]:
    """Power sums p_0..p_{count-1} of the roots of monic f, by Newton's
    identities on the coefficients."""
    d = upoly.degree(f)
    c = [Fraction(0)] * (d + 1)  # c[i] = coefficient of x^(d-i)
    for i in range(d + 1):
        c[i] = f[d - i]
    p = [Fraction(d)]
    for k in range(1, count):
        s = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            s += c[i] * p[k - i]
        if k <= d:
            s += k * c[k]
        p.append(-s)
    return p


def trace_gram(algebra: EtaleAlgebra) -> SymmetricForm:
    """Block-diagonal Gram matrix of x -> Tr(m_{x^2}) in the power basis."""
    blocks = []
    for f in algebra.factors:
        d = upoly.degree(f)
        p = _power_sums(f, 2 * d - 1)
        rows = tuple(tuple(p[i + j] for j in range(d)) for i in range(d))
        blocks.append(SymmetricForm(rows))
    out = blocks[0]
    for b in blocks[1:]:
        out = block_sum(out, b)
    return out


def trace_diagonal(algebra: EtaleAlgebra) -> DiagonalForm:
    return diagonalize(trace_gram(algebra))


def alpha(i: int, algebra: EtaleAlgebra) -> GradedClass:
    """Degree-i invariant of the algebra: the i-th Stiefel-Whitney class of
    its trace form."""
    n = algebra.total_degree
    if i < 0 or i > n:
        raise IndexOutOfRange(f"degree {i} outside 0..{n}")
    return sw_class(i, trace_diagonal(algebra))


def algebra_product(a: EtaleAlgebra, b: EtaleAlgebra) -> EtaleAlgebra:
    return EtaleAlgebra(a.factors + b.factors)
