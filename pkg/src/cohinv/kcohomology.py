"""Mod-2 Galois cohomology classes of Q, and of Q(t) restricted to symbols
built from rational constants and linear factors.

A class is a lazy formal sum of symbols with F2 coefficients, graded by
degree. Equality is a decision procedure (is_zero of the sum), not a
canonical form: products stay trivial (entry concatenation) and correctness
concentrates in the degree-wise decisions below. The standard facts those
decisions rest on are collected in MATH.md.

Symbol entries are reduced modulo squares on construction, and two exact
rewrites are applied so that common cancellations become syntactic:
{a,-a} = 0 and {a,a} = {-1,a}. Both are consequences of the Steinberg
relation and are valid with F2 coefficients, where the symbol ring is
commutative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import factorint as fi
from .errors import BaseMismatch, SpecializationAtPole, ZeroElement

BASE_Q = "Q"
BASE_QT = "Q(t)"

Rat = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Places of Q


@dataclass(frozen=True)
class Place:
    """The real place (prime=None) or a finite prime place of Q."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None:
            if self.prime < 2 or not fi.is_probable_prime(self.prime):
                raise ValueError(f"{self.prime} is not prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "Real" if self.prime is None else str(self.prime)


REAL = Place(None)


# ---------------------------------------------------------------------------
# Square classes (degree-1 data)


@dataclass(frozen=True)
class SquareClass:
    """An element of Q*/(Q*)^2: a sign bit plus the primes of odd exponent."""

    negative: bool
    odd_primes: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.negative and not self.odd_primes

    def rep(self) -> int:
        out = -1 if self.negative else 1
        for p in self.odd_primes:
            out *= p
        return out

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        merged = set(self.odd_primes) ^ set(other.odd_primes)
        return SquareClass(self.negative ^ other.negative, tuple(sorted(merged)))

    def __str__(self) -> str:
        return str(self.rep())


def square_class(q: Rat, budget: int | None = None) -> SquareClass:
    """Squarefree-part signature of a nonzero rational."""
    r = fi.squarefree_part(q, budget)
    fac = fi.factorint(abs(r), budget)
    return SquareClass(r < 0, tuple(sorted(fac)))


# ---------------------------------------------------------------------------
# Entries of symbols over the restricted Q(t)


@dataclass(frozen=True)
class LinearFactorElement:
    """c * prod (t - a)^e_a in Q(t)*, with rational roots a and c != 0."""

    constant: Fraction
    factors: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        if self.constant == 0:
            raise ZeroElement("constant part must be nonzero")
        roots = [a for a, _ in self.factors]
        if len(set(roots)) != len(roots) or roots != sorted(roots):
            raise ValueError("factor roots must be distinct and ascending")
        if any(e == 0 for _, e in self.factors):
            raise ValueError("factor exponents must be nonzero")

    @property
    def is_constant(self) -> bool:
        return not self.factors

    def exponent_at(self, a: Fraction) -> int:
        for root, e in self.factors:
            if root == a:
                return e
        return 0

    def unit_value_at(self, a: Fraction) -> Fraction:
        """Value at t=a of the element with any (t-a) factor removed."""
        out = self.constant
        for root, e in self.factors:
            if root != a:
                out *= (a - root) ** e
        return out

    def value_at(self, b: Fraction) -> Fraction:
        if any(root == b for root, _ in self.factors):
            raise SpecializationAtPole(f"entry vanishes or blows up at t={b}")
        return self.unit_value_at(b)

    def roots(self) -> tuple[Fraction, ...]:
        return tuple(root for root, _ in self.factors)

    def __str__(self) -> str:
        parts = []
        if self.constant != 1 or not self.factors:
            parts.append(str(self.constant))
        for root, e in self.factors:
            base = "t" if root == 0 else f"(t-{root})" if root > 0 else f"(t+{-root})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)


def lfe(constant: Rat, factors: Mapping[Rat, int] | None = None) -> LinearFactorElement:
    items = sorted((Fraction(a), int(e)) for a, e in (factors or {}).items() if e != 0)
    return LinearFactorElement(Fraction(constant), tuple(items))


def t_minus(a: Rat) -> LinearFactorElement:
    return lfe(1, {Fraction(a): 1})


def _reduce_lfe(x: LinearFactorElement) -> LinearFactorElement:
    """Reduce modulo squares of Q(t)*: exponents mod 2, constant reduced."""
    c = Fraction(fi.partial_squarefree(x.constant))
    kept = tuple((a, 1) for a, e in x.factors if e & 1)
    return LinearFactorElement(c, kept)


def _lfe_is_unit(x: LinearFactorElement) -> bool:
    return x.constant == 1 and not x.factors


def _lfe_negate(x: LinearFactorElement) -> LinearFactorElement:
    return LinearFactorElement(-x.constant, x.factors)


def _lfe_key(x: LinearFactorElement):
    return (
        tuple((a.numerator, a.denominator, e) for a, e in x.factors),
        x.constant.numerator,
        x.constant.denominator,
    )


_MINUS_ONE_LFE = LinearFactorElement(Fraction(-1), ())


# ---------------------------------------------------------------------------
# Symbols and graded classes


@dataclass(frozen=True)
class Symbol:
    """An ordered product {a_1,...,a_n} of degree-1 classes; degree = n."""

    entries: tuple

    @property
    def degree(self) -> int:
        return len(self.entries)


_UNIT_SYMBOL = Symbol(())


def _entry_key(base: str):
    return _lfe_key if base == BASE_QT else (lambda v: v)


def _combine_entries(reduced: list, base: str) -> Symbol | None:
    """Apply the symbol rewrites to already-reduced entries.

    Returns None when the symbol is the zero class of its degree.
    """
    if base == BASE_Q:
        # Integer entries: one scan over an (abs, sign) sort finds units,
        # {a,-a} pairs, and duplicate groups; c copies of a != -1 rewrite to
        # one copy plus c-1 entries -1.
        ordered = sorted(reduced, key=lambda v: (v if v > 0 else -v, v))
        has_dup = False
        prev = None
        for v in ordered:
            if v == 1:
                return None
            if prev is not None:
                if v == -prev:
                    return None  # {a,-a} kills the symbol
                if v == prev:
                    has_dup = True
            prev = v
        if has_dup:
            out = []
            minus_ones = 0
            idx = 0
            total = len(ordered)
            while idx < total:
                v = ordered[idx]
                count = 1
                while idx + count < total and ordered[idx + count] == v:
                    count += 1
                idx += count
                if v == -1:
                    minus_ones += count
                else:
                    out.append(v)
                    minus_ones += count - 1
            ordered = [-1] * minus_ones + out
        ordered.sort()
        return Symbol(tuple(ordered))
    # restricted Q(t) entries: same rewrites through the dict route
    if any(_lfe_is_unit(v) for v in reduced):
        return None
    counts: dict = {}
    for v in reduced:
        counts[v] = counts.get(v, 0) + 1
    for v in counts:
        if counts.get(_lfe_negate(v), 0):
            return None  # {a,-a} kills the symbol
    changed = True
    while changed:
        changed = False
        for v in list(counts):
            if v != _MINUS_ONE_LFE and counts[v] >= 2:
                counts[v] -= 2
                counts[_MINUS_ONE_LFE] = counts.get(_MINUS_ONE_LFE, 0) + 1
                counts[v] += 1  # {a,a} -> {-1,a}
                changed = True
    entries = []
    for v, c in counts.items():
        entries.extend([v] * c)
    entries.sort(key=_lfe_key)
    return Symbol(tuple(entries))


def _make_symbol(raw_entries: Iterable, base: str) -> Symbol | None:
    reduced = []
    for v in raw_entries:
        if base == BASE_QT:
            if not isinstance(v, LinearFactorElement):
                v = lfe(v)
            reduced.append(_reduce_lfe(v))
        else:
            reduced.append(fi.partial_squarefree(v))
    return _combine_entries(reduced, base)


class GradedClass:
    """Formal F2 sum of symbols, graded by degree, over a marked base field."""

    __slots__ = ("base", "components")

    def __init__(self, base: str, components: Mapping[int, frozenset] | None = None):
        if base not in (BASE_Q, BASE_QT):
            raise ValueError(f"unknown base marker {base!r}")
        self.base = base
        self.components = {
            d: frozenset(s) for d, s in (components or {}).items() if s
        }

    @classmethod
    def zero(cls, base: str = BASE_Q) -> "GradedClass":
        return cls(base)

    @classmethod
    def one(cls, base: str = BASE_Q) -> "GradedClass":
        return cls(base, {0: frozenset({_UNIT_SYMBOL})})

    def degrees(self) -> list[int]:
        return sorted(self.components)

    def component(self, d: int) -> frozenset:
        return self.components.get(d, frozenset())

    @property
    def max_degree(self) -> int:
        return max(self.components, default=-1)

    def is_structurally_zero(self) -> bool:
        return not self.components

    def __add__(self, other: "GradedClass") -> "GradedClass":
        return class_add(self, other)

    def __mul__(self, other: "GradedClass") -> "GradedClass":
        return class_mul(self, other)

    def __eq__(self, other) -> bool:
        # Structural equality of representations; use classes_equal for the
        # mathematical notion.
        return (
            isinstance(other, GradedClass)
            and self.base == other.base
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.base, frozenset(self.components.items())))

    def describe(self) -> str:
        if not self.components:
            return "0"
        key = _entry_key(self.base)
        chunks = []
        for d in self.degrees():
            syms = sorted(self.components[d], key=lambda s: [key(v) for v in s.entries])
            text = " + ".join(
                "{" + ",".join(str(v) for v in s.entries) + "}" for s in syms
            )
            chunks.append(f"deg{d}: {text or '1'}")
        return " | ".join(chunks)

    def __repr__(self) -> str:
        return f"GradedClass({self.base}: {self.describe()})"


def symbol(*entries: Rat, base: str = BASE_Q) -> GradedClass:
    """The class of the single symbol {entries}; degree = number of entries."""
    s = _make_symbol(entries, base)
    if s is None:
        return GradedClass.zero(base)
    return GradedClass(base, {s.degree: frozenset({s})})


def from_symbols(entry_tuples: Iterable[tuple], base: str = BASE_Q) -> GradedClass:
    acc: dict[int, set] = {}
    for entries in entry_tuples:
        s = _make_symbol(entries, base)
        if s is None:
            continue
        acc.setdefault(s.degree, set()).symmetric_difference_update({s})
    return GradedClass(base, {d: frozenset(v) for d, v in acc.items()})


def lift(c: GradedClass) -> GradedClass:
    """View a class over Q as a constant class over the restricted Q(t)."""
    if c.base != BASE_Q:
        raise BaseMismatch("lift expects a class over Q")
    comps: dict[int, set] = {}
    for d, syms in c.components.items():
        out = set()
        for s in syms:
            out.add(Symbol(tuple(lfe(v) for v in s.entries)))
        comps[d] = out
    return GradedClass(BASE_QT, {d: frozenset(v) for d, v in comps.items()})


def _check_same_base(a: GradedClass, b: GradedClass) -> None:
    if a.base != b.base:
        raise BaseMismatch(f"cannot combine classes over {a.base} and {b.base}")


def class_add(a: GradedClass, b: GradedClass) -> GradedClass:
    """Degree-wise F2 sum; identical symbols cancel in pairs."""
    _check_same_base(a, b)
    comps: dict[int, frozenset] = dict(a.components)
    for d, syms in b.components.items():
        comps[d] = comps.get(d, frozenset()) ^ syms
    return GradedClass(a.base, comps)


def class_mul(a: GradedClass, b: GradedClass) -> GradedClass:
    """Product: distributes over the sums, concatenates symbol entries."""
    _check_same_base(a, b)
    acc: dict[int, set] = {}
    for da, sa in a.components.items():
        for db, sb in b.components.items():
            for s1 in sa:
                for s2 in sb:
                    s = _combine_entries(list(s1.entries + s2.entries), a.base)
                    if s is None:
                        continue
                    acc.setdefault(s.degree, set()).symmetric_difference_update({s})
    return GradedClass(a.base, {d: frozenset(v) for d, v in acc.items()})


def classes_equal(a: GradedClass, b: GradedClass, budget: int | None = None) -> bool:
    return is_zero(class_add(a, b), budget)


# ---------------------------------------------------------------------------
# Hilbert symbols


def _split_unit(x: Fraction, p: int) -> tuple[int, Fraction]:
    """x = p^v * u with u a p-adic unit; returns (v, u)."""
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _unit_mod(u: Fraction, m: int) -> int:
    return u.numerator * pow(u.denominator, -1, m) % m


def _legendre(u: Fraction, p: int) -> int:
    t = pow(_unit_mod(u, p), (p - 1) // 2, p)
    return 1 if t == 1 else -1


def hilbert_symbol(a: Rat, b: Rat, v: Place) -> int:
    """The Hilbert symbol (a,b)_v in {+1,-1}, by the local formulas."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ZeroElement("Hilbert symbol requires nonzero arguments")
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = v.prime
    alpha, u = _split_unit(a, p)
    beta, w = _split_unit(b, p)
    if p == 2:
        eps_u = (_unit_mod(u, 4) - 1) // 2
        eps_w = (_unit_mod(w, 4) - 1) // 2
        om_u = 1 if _unit_mod(u, 8) in (3, 5) else 0
        om_w = 1 if _unit_mod(w, 8) in (3, 5) else 0
        exp = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if exp & 1 else 1
    out = -1 if (alpha * beta * ((p - 1) // 2)) & 1 else 1
    if beta & 1:
        out *= _legendre(u, p)
    if alpha & 1:
        out *= _legendre(w, p)
    return out


# ---------------------------------------------------------------------------
# The zero decision over Q


def _degree1_is_zero(syms: frozenset) -> bool:
    prod = 1
    for s in syms:
        prod *= s.entries[0]
    return prod > 0 and fi.is_perfect_square(prod)


def _ramified_places(syms: frozenset, budget: int | None) -> list[Place]:
    """Places where a degree-2 component can have local invariant -1."""
    odd_primes: set[int] = set()
    for s in syms:
        for e in s.entries:
            for p in fi.factorint(abs(e), budget):
                if p != 2:
                    odd_primes.add(p)
    return [REAL, Place(2)] + [Place(p) for p in sorted(odd_primes)]


def _degree2_is_zero(syms: frozenset, budget: int | None) -> bool:
    for v in _ramified_places(syms, budget):
        sign = 1
        for s in syms:
            sign *= hilbert_symbol(s.entries[0], s.entries[1], v)
        if sign != 1:
            return False
    return True


def _real_bit(syms: frozenset) -> int:
    return sum(1 for s in syms if all(e < 0 for e in s.entries)) & 1


def is_zero(c: GradedClass, budget: int | None = None) -> bool:
    """Decide vanishing over Q, degree by degree.

    Degree 0 is an F2 count; degree 1 asks whether the entry product is a
    positive square; degree 2 checks every local Hilbert invariant over the
    finitely many places that can ramify; degree >= 3 is detected by the real
    place alone. References in MATH.md.
    """
    if c.base != BASE_Q:
        raise BaseMismatch("is_zero decides classes over Q; see is_zero_fn")
    for d in c.degrees():
        syms = c.components[d]
        if d == 0:
            return False  # a surviving unit symbol is the nonzero element
        if d == 1:
            if not _degree1_is_zero(syms):
                return False
        elif d == 2:
            if not _degree2_is_zero(syms, budget):
                return False
        else:
            if _real_bit(syms):
                return False
    return True


# ---------------------------------------------------------------------------
# Residue, specialization and the zero decision over Q(t)


def residue_at(a: Rat, c: GradedClass) -> GradedClass:
    """Degree-lowering tame symbol at the place t=a.

    Each entry splits as (t-a)^e * u with u(a) != 0; the symbol expands
    multilinearly, repeated (t-a) factors reduce through {f,f} = {-1,f}, and
    a remaining single (t-a) is dropped while the other entries are evaluated
    at t=a. Unramified terms die.
    """
    if c.base != BASE_QT:
        raise BaseMismatch("residue_at expects a class over Q(t)")
    a = Fraction(a)
    acc: dict[int, set] = {}
    for d, syms in c.components.items():
        for s in syms:
            pivots = [i for i, v in enumerate(s.entries) if v.exponent_at(a) & 1]
            units = [v.unit_value_at(a) for v in s.entries]
            for mask in range(1, 1 << len(pivots)):
                chosen = [pivots[i] for i in range(len(pivots)) if mask >> i & 1]
                k = len(chosen)
                rest = [units[i] for i in range(len(s.entries)) if i not in chosen]
                entries = [Fraction(-1)] * (k - 1) + rest
                out = _make_symbol(entries, BASE_Q)
                if out is None:
                    continue
                acc.setdefault(out.degree, set()).symmetric_difference_update({out})
    return GradedClass(BASE_Q, {d: frozenset(v) for d, v in acc.items()})


def specialize(b: Rat, c: GradedClass) -> GradedClass:
    """Substitute t=b in every entry; b must avoid all roots present."""
    if c.base != BASE_QT:
        raise BaseMismatch("specialize expects a class over Q(t)")
    b = Fraction(b)
    acc: dict[int, set] = {}
    for d, syms in c.components.items():
        for s in syms:
            entries = [v.value_at(b) for v in s.entries]
            out = _make_symbol(entries, BASE_Q)
            if out is None:
                continue
            acc.setdefault(out.degree, set()).symmetric_difference_update({out})
    return GradedClass(BASE_Q, {d: frozenset(v) for d, v in acc.items()})


def _root_set(c: GradedClass) -> set[Fraction]:
    roots: set[Fraction] = set()
    for syms in c.components.values():
        for s in syms:
            for v in s.entries:
                roots.update(v.roots())
    return roots


def is_zero_fn(c: GradedClass, budget: int | None = None) -> bool:
    """Decide vanishing over the restricted Q(t): all residues at the roots
    present must vanish, and so must one specialization away from them."""
    if c.base != BASE_QT:
        raise BaseMismatch("is_zero_fn expects a class over Q(t)")
    roots = _root_set(c)
    for a in sorted(roots):
        if not is_zero(residue_at(a, c), budget):
            return False
    b = 0
    while Fraction(b) in roots:
        b += 1
    return is_zero(specialize(b, c), budget)


# ---------------------------------------------------------------------------
# Canonical reporting


def render(c: GradedClass, budget: int | None = None) -> str:
    """Degree-wise normal form, one line per nonzero degree, ascending.

    deg0: the unit bit; deg1: the squarefree representative; deg2: the set of
    places with local invariant -1; deg3 and up: the real-place bit.
    """
    if c.base != BASE_Q:
        raise BaseMismatch("render expects a class over Q")
    lines = []
    for d in c.degrees():
        syms = c.components[d]
        if d == 0:
            lines.append("deg0: 1")
        elif d == 1:
            prod = 1
            for s in syms:
                prod *= s.entries[0]
            r = fi.squarefree_part(prod, budget)
            if r != 1:
                lines.append(f"deg1: {r}")
        elif d == 2:
            ram = []
            for v in _ramified_places(syms, budget):
                sign = 1
                for s in syms:
                    sign *= hilbert_symbol(s.entries[0], s.entries[1], v)
                if sign != 1:
                    ram.append(v)
            if ram:
                finite = sorted(v.prime for v in ram if not v.is_real)
                names = [str(p) for p in finite] + (
                    ["Real"] if any(v.is_real for v in ram) else []
                )
                lines.append("deg2: ramified at {" + ", ".join(names) + "}")
        else:
            if _real_bit(syms):
                lines.append(f"deg{d}: real")
    return "\n".join(lines) if lines else "0"
