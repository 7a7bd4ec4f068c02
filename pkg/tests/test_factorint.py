from fractions import Fraction

import pytest

from cohinv import FactorizationFailure, ZeroElement
from cohinv.factorint import (
    factorint,
    is_perfect_square,
    is_probable_prime,
    partial_squarefree,
    squarefree_part,
)


def test_factorint_small():
    assert factorint(1) == {}
    assert factorint(2) == {2: 1}
    assert factorint(360) == {2: 3, 3: 2, 5: 1}
    assert factorint(10**6 + 3) == {1000003: 1}


def test_factorint_large_composite():
    n = 1000003 * 1000033 * 7**2
    assert factorint(n) == {7: 2, 1000003: 1, 1000033: 1}


def test_factorint_perfect_power():
    p = 1000003
    assert factorint(p**2) == {p: 2}
    assert factorint(p**3) == {p: 3}


def test_primality():
    assert is_probable_prime(2)
    assert is_probable_prime(2**61 - 1)
    assert not is_probable_prime(561)  # Carmichael
    assert not is_probable_prime(2**61 + 1)
    assert not is_probable_prime(1)


def test_budget_exhaustion():
    # product of two 16+-digit primes; rho cannot split it in 10 steps
    hard = 1000000000000037 * 1000000000000091
    with pytest.raises(FactorizationFailure):
        factorint(hard, budget=10)


def test_squarefree_part():
    assert squarefree_part(18) == 2
    assert squarefree_part(-4) == -1
    assert squarefree_part(Fraction(12, 25)) == 3
    assert squarefree_part(1) == 1
    assert squarefree_part(Fraction(-49, 2)) == -2
    with pytest.raises(ZeroElement):
        squarefree_part(0)


def test_partial_squarefree_is_exact_at_desk_scale():
    for q in (18, -4, Fraction(12, 25), 500, -999, Fraction(7, 48)):
        assert partial_squarefree(q) == squarefree_part(q)


def test_partial_squarefree_keeps_prime_cofactors():
    p = 1000003  # above the strip bound, kept verbatim
    assert partial_squarefree(4 * p) == p
    assert partial_squarefree(p * p) == 1  # square cofactor detected


def test_is_perfect_square():
    assert is_perfect_square(0) and is_perfect_square(144)
    assert not is_perfect_square(-4) and not is_perfect_square(2)
