from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cohinv import (
    BaseMismatch,
    GradedClass,
    Place,
    REAL,
    SpecializationAtPole,
    ZeroElement,
    class_add,
    class_mul,
    classes_equal,
    hilbert_symbol,
    is_zero,
    is_zero_fn,
    lfe,
    lift,
    render,
    residue_at,
    specialize,
    square_class,
    symbol,
    t_minus,
)
from cohinv.kcohomology import BASE_QT

nonzero = st.integers(-99, 99).filter(lambda n: n != 0)


# --- square classes -------------------------------------------------------


def test_square_class_examples():
    assert square_class(18).rep() == 2
    assert square_class(-4).rep() == -1
    assert square_class(Fraction(12, 25)).rep() == 3
    assert square_class(49).is_trivial


def test_square_class_zero_rejected():
    with pytest.raises(ZeroElement):
        square_class(0)


@given(nonzero, nonzero)
@settings(max_examples=60, deadline=None)
def test_square_class_is_multiplicative(a, b):
    assert square_class(a * b) == square_class(a) * square_class(b)


# --- group and ring operations --------------------------------------------


def test_class_add_cancellation():
    assert is_zero(class_add(symbol(2), symbol(2)))
    two_plus_three = class_add(symbol(2), symbol(3))
    assert len(two_plus_three.component(1)) == 2
    assert classes_equal(two_plus_three, symbol(6))
    c = symbol(-1, -1)
    assert class_add(c, GradedClass.zero()) == c


def test_class_mul_examples():
    assert not is_zero(class_mul(symbol(2), symbol(3)))
    assert is_zero(class_mul(symbol(4), symbol(3)))
    c = symbol(-1, -1)
    assert class_mul(GradedClass.one(), c) == c


def test_base_mismatch():
    qt = symbol(t_minus(0), base=BASE_QT)
    with pytest.raises(BaseMismatch):
        class_add(symbol(2), qt)
    with pytest.raises(BaseMismatch):
        class_mul(symbol(2), qt)
    with pytest.raises(BaseMismatch):
        is_zero(qt)
    with pytest.raises(BaseMismatch):
        render(qt)
    with pytest.raises(BaseMismatch):
        is_zero_fn(symbol(2))


@given(st.lists(nonzero, min_size=1, max_size=3), st.lists(nonzero, min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_mul_commutes(xs, ys):
    a, b = symbol(*xs), symbol(*ys)
    assert classes_equal(class_mul(a, b), class_mul(b, a))


def test_mul_distributes_and_associates():
    a, b, c = symbol(2, 3), symbol(-5), symbol(7, 11)
    lhs = class_mul(a, class_add(b, c))
    rhs = class_add(class_mul(a, b), class_mul(a, c))
    assert classes_equal(lhs, rhs)
    assert classes_equal(
        class_mul(class_mul(a, b), c), class_mul(a, class_mul(b, c))
    )


# --- Hilbert symbols -------------------------------------------------------


@pytest.mark.parametrize(
    "a,b,place,expected",
    [
        (-1, -1, REAL, -1),
        (-1, -1, Place(2), -1),
        (2, 17, Place(17), 1),
        (2, 3, Place(3), -1),
        (-1, 3, Place(3), -1),
        (2, 3, Place(2), -1),
        (3, -2, Place(2), 1),
        (5, 2, Place(2), -1),
    ],
)
def test_hilbert_symbol_values(a, b, place, expected):
    assert hilbert_symbol(a, b, place) == expected


def test_hilbert_symbol_rejects_zero():
    with pytest.raises(ZeroElement):
        hilbert_symbol(0, 3, REAL)


def test_place_validation():
    with pytest.raises(ValueError):
        Place(4)
    with pytest.raises(ValueError):
        Place(1)
    assert str(Place(17)) == "17"
    assert str(REAL) == "Real"


@given(nonzero, nonzero)
@settings(max_examples=60, deadline=None)
def test_hilbert_reciprocity(a, b):
    from cohinv.factorint import factorint

    places = [REAL, Place(2)]
    places += [Place(p) for p in sorted(factorint(abs(a * b))) if p != 2]
    prod = 1
    for v in places:
        prod *= hilbert_symbol(a, b, v)
    assert prod == 1


# --- the zero decision over Q ----------------------------------------------


def test_is_zero_examples():
    assert is_zero(symbol(5, -5))
    assert not is_zero(symbol(-1, -1))
    assert is_zero(symbol(3, -2))
    assert not is_zero(symbol(-1, -1, -1))
    assert is_zero(symbol(2, -1, -1))
    assert is_zero(GradedClass.zero())
    assert not is_zero(GradedClass.one())


@given(nonzero)
@settings(max_examples=60, deadline=None)
def test_steinberg_relations(a):
    assert is_zero(symbol(a, -a))
    if a != 1:
        assert is_zero(symbol(a, 1 - a))
    assert classes_equal(symbol(a, a), symbol(-1, a))


def test_mixed_degree_class():
    c = class_add(symbol(3), symbol(-1, -1))
    assert not is_zero(c)
    assert sorted(c.degrees()) == [1, 2]


# --- render ----------------------------------------------------------------


def test_render_examples():
    assert render(symbol(18)) == "deg1: 2"
    assert render(symbol(-1, -1)) == "deg2: ramified at {2, Real}"
    assert render(GradedClass.zero()) == "0"
    assert render(GradedClass.one()) == "deg0: 1"
    assert render(symbol(-1, -1, -1)) == "deg3: real"
    assert render(class_add(symbol(-3), symbol(2, 3))) == "deg1: -3\ndeg2: ramified at {2, 3}"
    # zero components render away entirely
    assert render(class_add(symbol(2), symbol(18))) == "0"


# --- residues, specialization, and the function-field decision -------------


def test_residue_examples():
    c = class_mul(symbol(t_minus(0), base=BASE_QT), lift(symbol(-1, -1)))
    assert classes_equal(residue_at(0, c), symbol(-1, -1))
    c2 = class_mul(symbol(t_minus(1), base=BASE_QT), lift(symbol(7)))
    assert is_zero(residue_at(0, c2))
    c3 = symbol(lfe(5, {2: 2}), 7, base=BASE_QT)
    assert is_zero(residue_at(2, c3))


def test_residue_repeated_factor_reduction():
    # a symbol with two distinct entries sharing the place t=0
    c = symbol(lfe(1, {0: 1}), lfe(5, {0: 1}), base=BASE_QT)
    # {t, 5t} = {t,t} + {t,5}; residue picks up {-1} + {5}
    assert classes_equal(residue_at(0, c), class_add(symbol(-1), symbol(5)))


def test_specialize_examples():
    c = class_add(symbol(t_minus(0), base=BASE_QT), symbol(lfe(3), base=BASE_QT))
    assert classes_equal(specialize(2, c), symbol(6))
    assert classes_equal(specialize(1, lift(symbol(-1, -1))), symbol(-1, -1))
    assert classes_equal(
        specialize(0, symbol(t_minus(1), lfe(5), base=BASE_QT)), symbol(-1, 5)
    )


def test_specialize_at_pole():
    with pytest.raises(SpecializationAtPole):
        specialize(0, symbol(t_minus(0), base=BASE_QT))


def test_is_zero_fn_examples():
    assert not is_zero_fn(symbol(t_minus(0), base=BASE_QT))
    parts = [
        symbol(lfe(1, {0: 1, 1: 1}), base=BASE_QT),
        symbol(t_minus(0), base=BASE_QT),
        symbol(t_minus(1), base=BASE_QT),
    ]
    total = GradedClass.zero(BASE_QT)
    for p in parts:
        total = class_add(total, p)
    assert is_zero_fn(total)
    assert not is_zero_fn(lift(symbol(-1, -1)))


def test_is_zero_fn_implies_all_specializations_vanish():
    c = class_mul(symbol(t_minus(3), base=BASE_QT), lift(symbol(5, -5)))
    assert is_zero_fn(c)
    for b in (0, 1, 2, 4, Fraction(1, 2)):
        assert is_zero(specialize(b, c))


def test_lift_roundtrip():
    c = symbol(6, -10)
    assert classes_equal(specialize(0, lift(c)), c)
