"""Small exact univariate polynomial kit over Q.

Polynomials are tuples of Fractions in ascending degree order, normalized so
the last coefficient is nonzero (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction

Poly = tuple[Fraction, ...]


def poly(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    return len(f) - 1  # -1 for the zero polynomial


def evaluate(f: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return poly(
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    )


def scale(f: Poly, c: Fraction) -> Poly:
    return poly(x * c for x in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly(out)


def monic(f: Poly) -> Poly:
    if not f:
        raise ValueError("zero polynomial has no monic form")
    lead = f[-1]
    return f if lead == 1 else tuple(c / lead for c in f)


def rem(f: Poly, g: Poly) -> Poly:
    """Remainder of f modulo g, g nonzero."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f)
    dg, lead = degree(g), g[-1]
    while len(r) - 1 >= dg and r:
        k = len(r) - 1 - dg
        q = r[-1] / lead
        for i in range(len(g)):
            r[k + i] -= q * g[i]
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def gcd(f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, rem(f, g)
    return monic(f) if f else ()


def derivative(f: Poly) -> Poly:
    return poly(i * c for i, c in enumerate(f) if i > 0)


def is_squarefree(f: Poly) -> bool:
    if not f or degree(f) == 0:
        return degree(f) == 0  # nonzero constants are vacuously squarefree
    return degree(gcd(f, derivative(f))) == 0


def shift(f: Poly, c: Fraction) -> Poly:
    """Compose f with x + c."""
    out: Poly = ()
    for coef in reversed(f):
        out = add(mul(out, (Fraction(c), Fraction(1))), (Fraction(coef),))
    return out
