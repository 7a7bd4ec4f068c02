"""Brute-force local solubility of z^2 = a x^2 + b y^2.

This is the oracle side of the dual-route check for Hilbert symbols: it never
touches the closed-form local formulas. Decisions come from exhaustive residue
searches combined with elementary valuation descents, with the Hensel bounds
that make the searches conclusive recorded in MATH.md. Arguments are first
scaled by rational squares to squarefree integers, which maps solutions to
solutions bijectively.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ZeroElement
from .factorint import partial_squarefree
from .kcohomology import Place


@lru_cache(maxsize=None)
def _squares_mod(m: int) -> frozenset[int]:
    return frozenset(z * z % m for z in range(m))


@lru_cache(maxsize=None)
def _odd_squares_mod(m: int) -> frozenset[int]:
    return frozenset(z * z % m for z in range(1, m, 2))


@lru_cache(maxsize=None)
def _soluble_mod2(a: int, b: int) -> bool:
    """Primitive solubility of a x^2 + b y^2 = z^2 over Z_2, decided mod 64.

    For squarefree a, b a primitive solution mod 2^6 Hensel-lifts (the worst
    gradient valuation is 2), and any 2-adic solution reduces to one.
    """
    m = 64
    anym = _squares_mod(m)
    oddm = _odd_squares_mod(m)
    for x in range(m):
        axx = a * x * x % m
        for y in range(m):
            c = (axx + b * y * y) % m
            if (x | y) & 1:
                if c in anym:
                    return True
            elif c in oddm:
                return True
    return False


def _nonzero_pair_hits(a: int, b: int, p: int, targets: frozenset[int]) -> bool:
    """Is a*x^2 + b*y^2 mod p in targets for some (x, y) != (0, 0)?"""
    for x in range(p):
        axx = a * x * x % p
        for y in range(1 if x == 0 else 0, p):
            if (axx + b * y * y) % p in targets:
                return True
    return False


def _soluble_odd(a: int, b: int, p: int) -> bool:
    """Primitive solubility of a x^2 + b y^2 = z^2 over Z_p, p odd, for
    squarefree integers a, b. Valuation patterns are handled by descent:

    - both units: a smooth F_p point exists iff a Z_p point does;
    - p | a only: a primitive solution forces p-unit y, so b must be a square
      residue, and conversely a square residue lifts;
    - p | a and p | b: dividing by p after the forced substitution z = p z'
      leaves (a/p) x^2 + (b/p) y^2 = p z'^2, whose primitive solutions force
      (x, y) nonzero mod p.
    """
    va, vb = int(a % p == 0), int(b % p == 0)
    if va and vb:
        return _nonzero_pair_hits(a // p, b // p, p, frozenset({0}))
    if va:
        return _nonzero_pair_hits(0, b, p, _squares_mod(p) - {0})
    if vb:
        return _nonzero_pair_hits(0, a, p, _squares_mod(p) - {0})
    return _nonzero_pair_hits(a, b, p, _squares_mod(p))


def hilbert_symbol_oracle(a, b, v: Place) -> int:
    """(a,b)_v decided by local solubility search; +1 iff soluble."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ZeroElement("the symbol requires nonzero arguments")
    if v.is_real:
        return 1 if a > 0 or b > 0 else -1
    sa, sb = partial_squarefree(a), partial_squarefree(b)
    if v.prime == 2:
        return 1 if _soluble_mod2(sa % 64, sb % 64) else -1
    return 1 if _soluble_odd(sa, sb, v.prime) else -1
