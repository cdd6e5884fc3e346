"""Exact integer and rational primitives shared by every other module.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "Fraction",
    "FactorizationBudgetExceeded",
    "DEFAULT_TRIAL_LIMIT",
    "exact_sqrt",
    "exact_sqrt_fraction",
    "factor",
    "squarefree_part",
    "is_squarefree",
    "make_rational",
    "gcd",
]

# Largest trial divisor used when factoring.
DEFAULT_TRIAL_LIMIT = 2 * 10**7


class FactorizationBudgetExceeded(RuntimeError):
    """Trial division could not finish within the configured divisor limit."""


def exact_sqrt(n: int) -> int | None:
    """Return ``r`` with ``r*r == n``, or ``None`` if ``n`` is not a square.

    >>> exact_sqrt(2401)
    49
    >>> exact_sqrt(2) is None
    True
    """
    if n < 0:
        raise ValueError(f"exact_sqrt of negative number {n}")
    r = isqrt(n)
    return r if r * r == n else None


def exact_sqrt_fraction(q: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational, or ``None`` if it is not a square."""
    if q < 0:
        return None
    num = exact_sqrt(q.numerator)
    if num is None:
        return None
    den = exact_sqrt(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def make_rational(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError(f"rational with zero denominator: {num}/0")
    return Fraction(num, den)


def _divisors():
    yield 2
    yield 3
    d = 5
    while True:
        yield d
        yield d + 2
        d += 6


def factor(n: int, limit: int = DEFAULT_TRIAL_LIMIT) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division up to ``limit``.

    A cofactor left over after dividing out everything up to ``limit`` is
    accepted when it is provably prime (``< limit**2``).  Anything larger
    raises :class:`FactorizationBudgetExceeded`.
    """
    if n < 1:
        raise ValueError(f"factor needs a positive integer, got {n}")
    out: dict[int, int] = {}
    for d in _divisors():
        if d * d > n:
            break
        if d > limit:
            if n >= limit * limit:
                raise FactorizationBudgetExceeded(
                    f"cofactor {n} has no factor <= {limit} and may be composite")
            break
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out[d] = e
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n: int, limit: int = DEFAULT_TRIAL_LIMIT) -> tuple[int, int]:
    """Split ``n`` as ``s * m**2`` with ``s`` squarefree.

    >>> squarefree_part(180)
    (5, 6)
    >>> squarefree_part(504)
    (14, 6)
    """
    if n < 1:
        raise ValueError(f"squarefree_part needs a positive integer, got {n}")
    try:
        fac = factor(n, limit)
    except FactorizationBudgetExceeded:
        return _squarefree_part_with_residue(n, limit)
    s = m = 1
    for p, e in fac.items():
        if e & 1:
            s *= p
        m *= p ** (e // 2)
    return s, m


def _squarefree_part_with_residue(n: int, limit: int) -> tuple[int, int]:
    # Cofactor r has only prime factors > limit.  Below limit**3 it is a prime,
    # a product of two distinct primes, or a prime square, all told apart by
    # a square test.
    s = m = 1
    r = n
    for d in _divisors():
        if d > limit:
            break
        if r % d == 0:
            e = 0
            while r % d == 0:
                r //= d
                e += 1
            if e & 1:
                s *= d
            m *= d ** (e // 2)
    if r >= limit ** 3:
        raise FactorizationBudgetExceeded(
            f"cannot decide squarefree part of cofactor {r} of {n} "
            f"with trial divisors <= {limit}")
    root = exact_sqrt(r)
    if root is not None and r > 1:
        m *= root
    else:
        s *= r
    return s, m


def is_squarefree(n: int, limit: int = DEFAULT_TRIAL_LIMIT) -> bool:
    return n >= 1 and squarefree_part(n, limit)[1] == 1
