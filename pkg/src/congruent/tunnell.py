"""Tunnell's criterion for congruent numbers via ternary form counts.

For squarefree odd ``n`` compare the number of integer solutions of
``2x^2 + y^2 + 32z^2 = n`` with half the number of solutions of
``2x^2 + y^2 + 8z^2 = n``.  For even ``n`` use ``4x^2 + y^2 + 32z^2`` and
``4x^2 + y^2 + 8z^2`` evaluated at ``n/2``.  Unequal counts prove ``n`` is
not congruent; equal counts imply congruence under the Birch and
Swinnerton-Dyer conjecture.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .core import is_squarefree

__all__ = [
    "TernaryForm",
    "TunnellVerdict",
    "count_representations",
    "tunnell_test",
    "congruent_numbers",
]


@dataclass(frozen=True)
class TernaryForm:
    """The diagonal form ``a*x^2 + b*y^2 + c*z^2``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"form coefficients must be positive: {self}")

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.a * x * x + self.b * y * y + self.c * z * z


ODD_SMALL = TernaryForm(2, 1, 32)
ODD_LARGE = TernaryForm(2, 1, 8)
EVEN_SMALL = TernaryForm(4, 1, 32)
EVEN_LARGE = TernaryForm(4, 1, 8)


def count_representations(f: TernaryForm, n: int) -> int:
    """Number of ordered integer triples (signs and zeros included) with ``f = n``."""
    if n < 1:
        raise ValueError(f"count_representations needs n >= 1, got {n}")
    # Loop over the two largest coefficients; the last variable is solved exactly.
    c1, c2, c3 = sorted((f.a, f.b, f.c), reverse=True)
    count = 0
    for z in range(-isqrt(n // c1), isqrt(n // c1) + 1):
        r1 = n - c1 * z * z
        for y in range(-isqrt(r1 // c2), isqrt(r1 // c2) + 1):
            r2 = r1 - c2 * y * y
            if r2 % c3:
                continue
            x2 = r2 // c3
            x = isqrt(x2)
            if x * x == x2:
                count += 1 if x == 0 else 2
    return count


@dataclass(frozen=True)
class TunnellVerdict:
    n: int
    congruent: bool
    # True when the verdict relies on Birch and Swinnerton-Dyer (equality case).
    conditional: bool
    small_count: int
    large_count: int

    def __bool__(self) -> bool:
        return self.congruent


def tunnell_test(n: int) -> TunnellVerdict:
    """Decide whether the squarefree integer ``n`` is congruent.

    >>> tunnell_test(5).congruent
    True
    >>> tunnell_test(1).congruent
    False
    """
    if n < 1 or not is_squarefree(n):
        raise ValueError(f"tunnell_test needs a squarefree positive integer, got {n}")
    if n % 2:
        small = count_representations(ODD_SMALL, n)
        large = count_representations(ODD_LARGE, n)
    else:
        small = count_representations(EVEN_SMALL, n // 2)
        large = count_representations(EVEN_LARGE, n // 2)
    congruent = 2 * small == large
    return TunnellVerdict(n, congruent, congruent, small, large)


def congruent_numbers(lo: int, hi: int) -> list[int]:
    """Squarefree ``n`` in ``[lo, hi]`` that pass Tunnell's test."""
    return [n for n in range(max(lo, 1), hi + 1)
            if is_squarefree(n) and tunnell_test(n).congruent]
