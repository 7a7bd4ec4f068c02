"""Budgeted integer factorization: trial division, then Brent's rho.

Exceeding the rho step budget raises FactorizationFailure instead of silently
degrading; callers that only need square classes at desk scale never see it.
Primality is decided by Miller-Rabin with bases that are deterministic below
3.3e24, backed by a strong Lucas test above that bound (BPSW, no known
counterexample; see MATH.md).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import FactorizationFailure, ZeroElement

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 1 << 18


def set_default_budget(budget: int) -> None:
    global DEFAULT_BUDGET
    if budget <= 0:
        raise ValueError("factorization budget must be positive")
    DEFAULT_BUDGET = budget


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


_STRIP_PRIMES = _sieve(1000)
_trial_primes: list[int] | None = None


def _trial_prime_list() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = _sieve(TRIAL_LIMIT)
    return _trial_primes


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _mr_composite(a: int, d: int, s: int, n: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    # Selfridge parameter choice; n odd, not a perfect square, n > 2.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = (k & -k).bit_length() - 1
    t = k >> s
    u, v, qk = 1, p, q
    for bit in bin(t)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v = (u >> 1) % n, (v >> 1) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _STRIP_PRIMES[:25]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if _mr_composite(a, d, s, n):
            return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _strong_lucas_prp(n)


def _brent_rho(n: int, c: int, charge) -> int | None:
    """One Brent cycle-detection attempt; returns a nontrivial factor or None."""
    y, r, q = 2, 1, 1
    g, x, ys = 1, 2, 2
    m = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            cnt = min(m, r - k)
            charge(cnt)
            for _ in range(cnt):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
    if g == n:
        g = 1
        y = ys
        while g == 1:
            charge(1)
            y = (y * y + c) % n
            g = math.gcd(abs(x - y), n)
    return g if g != n else None


def _iroot(n: int, k: int) -> int:
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


_factor_cache: dict[int, dict[int, int]] = {}


def factorint(n: int, budget: int | None = None) -> dict[int, int]:
    """Full prime factorization of n >= 1 as a prime -> exponent map."""
    if n < 1:
        raise ValueError("factorint expects a positive integer")
    cached = _factor_cache.get(n)
    if cached is not None:
        return dict(cached)
    if budget is None:
        budget = DEFAULT_BUDGET
    remaining = [budget]
    orig = n

    def charge(steps: int) -> None:
        remaining[0] -= steps
        if remaining[0] < 0:
            raise FactorizationFailure(orig, budget)

    factors: dict[int, int] = {}
    for p in _trial_prime_list():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = factors.get(p, 0) + e
        if n == 1:
            break
    stack: list[tuple[int, int]] = [(n, 1)] if n > 1 else []
    while stack:
        m, mult = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + mult
            continue
        split = None
        for k in (2, 3):
            r = _iroot(m, k)
            if r**k == m:
                split = (r, k)
                break
        if split is not None:
            stack.append((split[0], mult * split[1]))
            continue
        d = None
        c = 1
        while d is None:
            d = _brent_rho(m, c, charge)
            c += 1
        stack.append((d, mult))
        stack.append((m // d, mult))
    _factor_cache[orig] = dict(factors)
    return factors


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _as_integer_pair(q) -> tuple[int, int]:
    if isinstance(q, Fraction):
        return q.numerator, q.denominator
    return int(q), 1


def squarefree_part(q, budget: int | None = None) -> int:
    """Signed squarefree integer representing q modulo nonzero squares."""
    num, den = _as_integer_pair(q)
    if num == 0:
        raise ZeroElement("0 has no square class")
    sign = -1 if num < 0 else 1
    fac = factorint(abs(num), budget)
    for p, e in factorint(den, budget).items():
        fac[p] = fac.get(p, 0) + e
    out = sign
    for p in sorted(fac):
        if fac[p] & 1:
            out *= p
    return out


def partial_squarefree(q) -> int:
    """Cheap modulo-squares reduction: strips squares of primes <= 1000 and a
    perfect-square cofactor. Never factors, never fails; the result may keep a
    square of a large prime in rare cases, which downstream decisions tolerate.
    """
    num, den = _as_integer_pair(q)
    if num == 0:
        raise ZeroElement("0 has no square class")
    n = abs(num) * den
    sign = -1 if num < 0 else 1
    out = 1
    for p in _STRIP_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e & 1:
                out *= p
    if n > 1 and not is_perfect_square(n):
        out *= n
    return sign * out
