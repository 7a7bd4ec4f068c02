"""Binary forms of even degree 2g+2 as branch data of hyperelliptic curves:
smoothness, the associated etale algebra, the graded invariants, the leading
coefficient invariant, the top invariant built from a point evaluation, and
the GL2 action on forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import upoly
from .errors import (
    IndexOutOfRange,
    NotSquarefree,
    OddGenusUnsupported,
    OutsideU0,
    PointOnWeierstrassDivisor,
    SingularMatrix,
)
from .kcohomology import BASE_Q, GradedClass, class_mul, symbol
from .etale import EtaleAlgebra, alpha


@dataclass(frozen=True)
class BinaryForm:
    """f(L1,L2) = sum_i coeffs[i] * L1^(n-i) * L2^i with n even, n >= 6."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.coeffs) - 1
        if n < 6 or n % 2:
            raise ValueError("binary form degree must be even and at least 6")
        if all(c == 0 for c in self.coeffs):
            raise ValueError("binary form must be nonzero")

    @classmethod
    def from_coeffs(cls, coeffs) -> "BinaryForm":
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def genus(self) -> int:
        return self.n // 2 - 1

    def dehomogenized(self) -> upoly.Poly:
        """f(x, 1) as a univariate polynomial (ascending coefficients)."""
        return upoly.poly(reversed(self.coeffs))


@dataclass(frozen=True)
class Matrix2:
    """An invertible 2x2 rational matrix."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        if self.det == 0:
            raise SingularMatrix("matrix must be invertible")

    @classmethod
    def from_rows(cls, rows) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class ProjectivePoint:
    """A point (p0 : p1) of the projective line, coordinates not both zero."""

    p0: Fraction
    p1: Fraction

    def __post_init__(self):
        if self.p0 == 0 and self.p1 == 0:
            raise ValueError("projective point needs a nonzero coordinate")

    @classmethod
    def of(cls, p0, p1) -> "ProjectivePoint":
        return cls(Fraction(p0), Fraction(p1))

    def __str__(self) -> str:
        return f"({self.p0}:{self.p1})"


def smooth_check(f: BinaryForm) -> bool:
    """True iff f is squarefree as a binary form: f(x,1) squarefree and the
    root at infinity (present when x_0 = 0) is simple."""
    if f.coeffs[0] == 0 and f.coeffs[1] == 0:
        return False
    return upoly.is_squarefree(f.dehomogenized())


def _require_smooth(f: BinaryForm) -> None:
    if not smooth_check(f):
        raise NotSquarefree("binary form has a repeated root")


def weierstrass_algebra(f: BinaryForm) -> EtaleAlgebra:
    """The degree-n etale algebra cut out by the roots of f. When x_0 = 0 the
    simple root at infinity contributes a split factor Q."""
    _require_smooth(f)
    poly = f.dehomogenized()
    factors = [poly]
    if f.coeffs[0] == 0:
        factors.append((Fraction(0), Fraction(1)))  # the factor x, i.e. Q
    return EtaleAlgebra.from_polys(factors)


def curve_alpha(i: int, f: BinaryForm) -> GradedClass:
    """Degree-i invariant of the curve branched at f."""
    if i < 0 or i > f.n:
        raise IndexOutOfRange(f"degree {i} outside 0..{f.n}")
    return alpha(i, weierstrass_algebra(f))


def tau(f: BinaryForm) -> GradedClass:
    """The degree-1 class of the leading coefficient; defined only where
    x_0 != 0, and does not extend across that locus."""
    _require_smooth(f)
    if f.coeffs[0] == 0:
        raise OutsideU0("leading coefficient vanishes")
    return symbol(f.coeffs[0])


def eval_at_point(f: BinaryForm, p: ProjectivePoint) -> Fraction:
    """f(p0, p1); consumers read it modulo squares (degree of f is even)."""
    n = f.n
    return sum(
        (c * p.p0 ** (n - i) * p.p1**i for i, c in enumerate(f.coeffs)),
        Fraction(0),
    )


def _beta_point_scan():
    yield ProjectivePoint.of(0, 1)
    yield ProjectivePoint.of(1, 1)
    k = 1
    while True:
        yield ProjectivePoint.of(1, -k)
        k += 1
        yield ProjectivePoint.of(1, k)


def default_beta_point(f: BinaryForm) -> ProjectivePoint:
    """(1:0) off the x_0 = 0 locus, else the first point of the deterministic
    scan (0:1), (1:1), (1:-1), (1:2), ... where f does not vanish."""
    if f.coeffs[0] != 0:
        return ProjectivePoint.of(1, 0)
    for p in _beta_point_scan():
        if eval_at_point(f, p) != 0:
            return p
    raise AssertionError("unreachable: f has finitely many roots")


def beta(f: BinaryForm, point: ProjectivePoint | None = None) -> GradedClass:
    """The degree-(g+2) invariant {f(p)} * alpha_{g+1}, independent of the
    choice of p off the branch locus. Even genus only."""
    _require_smooth(f)
    if f.genus % 2:
        raise OddGenusUnsupported("this construction needs even genus")
    if point is None:
        point = default_beta_point(f)
    value = eval_at_point(f, point)
    if value == 0:
        raise PointOnWeierstrassDivisor(f"f vanishes at {point}")
    return class_mul(symbol(value), curve_alpha(f.genus + 1, f))


def gl2_act(m: Matrix2, f: BinaryForm) -> BinaryForm:
    """det(A)^g * f(A^{-1}(L1, L2)), expanded exactly."""
    if m.det == 0:
        raise SingularMatrix("matrix must be invertible")
    n, g = f.n, f.genus
    # A^{-1} = (1/det) [[d, -b], [-c, a]]; the 1/det powers are collected at
    # the end as det^(g-n).
    u = (m.d, -m.b)
    v = (-m.c, m.a)

    def linear_power(t, k):
        a0, a1 = t
        return [comb(k, j) * a0 ** (k - j) * a1**j for j in range(k + 1)]

    acc = [Fraction(0)] * (n + 1)
    for i, coeff in enumerate(f.coeffs):
        if coeff == 0:
            continue
        left = linear_power(u, n - i)
        right = linear_power(v, i)
        for j, cl in enumerate(left):
            if cl == 0:
                continue
            for k, cr in enumerate(right):
                acc[j + k] += coeff * cl * cr
    scale = m.det ** (g - n)
    return BinaryForm(tuple(scale * c for c in acc))


def m_overlap(r: int, s: int) -> int:
    """Sum of 2^k over the binary digits shared by r and s."""
    if r < 0 or s < 0:
        raise ValueError("arguments must be nonnegative")
    return r & s


def minus_one_power(m: int) -> GradedClass:
    """The class {-1}^m: the degree-m symbol with m entries -1 (m=0 gives 1)."""
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    return symbol(*([-1] * m)) if m else GradedClass.one(BASE_Q)
