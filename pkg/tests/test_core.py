from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from congruent.core import (
    FactorizationBudgetExceeded,
    exact_sqrt,
    exact_sqrt_fraction,
    factor,
    is_squarefree,
    make_rational,
    squarefree_part,
)


def brute_squarefree_part(n):
    s, m, d = 1, 1, 2
    while n > 1:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            s *= d
        m *= d ** (e // 2)
        d += 1
    return s, m


@pytest.mark.parametrize("n, root", [(2401, 49), (0, 0), (1, 1), (2, None), (48, None)])
def test_exact_sqrt(n, root):
    assert exact_sqrt(n) == root


def test_exact_sqrt_negative():
    with pytest.raises(ValueError):
        exact_sqrt(-4)


@given(st.integers(0, 10**10))
@settings(max_examples=1000)
def test_exact_sqrt_of_square(r):
    assert exact_sqrt(r * r) == r
    if r > 0:
        assert exact_sqrt(r * r + 1) is None


def test_exact_sqrt_fraction():
    assert exact_sqrt_fraction(Fraction(1681, 144)) == Fraction(41, 12)
    assert exact_sqrt_fraction(Fraction(2, 9)) is None
    assert exact_sqrt_fraction(Fraction(-1, 4)) is None


@pytest.mark.parametrize("n, expected", [(1, (1, 1)), (180, (5, 6)), (504, (14, 6)),
                                         (2608225, (1, 1615)), (1873180325, (53, 5945))])
def test_squarefree_part(n, expected):
    assert squarefree_part(n) == expected


@given(st.integers(1, 200_000))
@settings(max_examples=1000)
def test_squarefree_part_matches_brute_force(n):
    s, m = squarefree_part(n)
    assert (s, m) == brute_squarefree_part(n)
    assert s * m * m == n
    assert all(e == 1 for e in factor(s).values())


def test_factor_budget():
    p, q, r = 1009, 1013, 1019
    with pytest.raises(FactorizationBudgetExceeded):
        factor(p * q, limit=1000)
    # Two large primes below limit**3 are still decidable by a square test.
    assert squarefree_part(p * q, limit=1000) == (p * q, 1)
    assert squarefree_part(4 * p * p, limit=1000) == (1, 2 * p)
    with pytest.raises(FactorizationBudgetExceeded):
        squarefree_part(p * q * r, limit=1000)


def test_is_squarefree():
    assert [n for n in range(1, 20) if is_squarefree(n)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]


@pytest.mark.parametrize("num, den, expected", [(40, 6, Fraction(20, 3)), (-3, -2, Fraction(3, 2)),
                                                (0, 7, Fraction(0))])
def test_make_rational(num, den, expected):
    r = make_rational(num, den)
    assert r == expected and r.denominator > 0


def test_make_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        make_rational(1, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-50, 50).filter(bool))
def test_make_rational_scale_invariant(a, b, k):
    assert make_rational(a, b) == make_rational(k * a, k * b)
