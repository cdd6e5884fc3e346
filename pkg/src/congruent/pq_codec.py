"""Right-triangle sides of a congruent number and their (P, Q) parameters.

A representation of ``N`` is a pair of rational legs ``alpha = a1/a2`` and
``beta = b1/b2`` with ``alpha * beta = 2N``.  Writing ``A = a1*b2`` and
``B = a2*b1`` gives a primitive Pythagorean triple, hence ``A = P^2 - Q^2``
and ``B = 2PQ`` for coprime ``P > Q`` of opposite parity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .core import exact_sqrt, exact_sqrt_fraction, squarefree_part

__all__ = [
    "InvariantError",
    "NotRepresentedError",
    "Report",
    "TriangleSides",
    "PythTriple",
    "PQPair",
    "CompressedPQ",
    "sides_report",
    "pq_to_sides",
    "sides_to_pq",
    "compress_pq",
    "validate_pq",
    "height",
]


class InvariantError(ValueError):
    """A value violates a structural property it is required to have."""


class NotRepresentedError(ValueError):
    """The (P, Q) pair does not give a triangle of area N."""


@dataclass
class Report:
    """Named failures collected by a validator; empty means valid."""

    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name: str, condition: bool) -> bool:
        if not condition:
            self.failures.append(name)
        return condition

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class TriangleSides:
    """Legs ``alpha <= beta`` of a rational right triangle with area ``N``.

    Use :meth:`from_legs` to build one from legs in either order.
    """

    N: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        a, b = Fraction(self.alpha), Fraction(self.beta)
        if a <= 0 or b <= 0:
            raise InvariantError(f"legs must be positive: {a}, {b}")
        if a > b:
            raise InvariantError(f"legs out of order: {a} > {b}")
        if a * b != 2 * self.N:
            raise InvariantError(f"legs {a}, {b} do not have area {self.N}")
        c = exact_sqrt_fraction(a * a + b * b)
        if c is None:
            raise InvariantError(f"hypotenuse of {a}, {b} is irrational")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", c)

    @classmethod
    def from_legs(cls, N: int, a, b) -> "TriangleSides":
        a, b = Fraction(a), Fraction(b)
        return cls(N, min(a, b), max(a, b))

    @property
    def a1(self) -> int:
        return self.alpha.numerator

    @property
    def a2(self) -> int:
        return self.alpha.denominator

    @property
    def b1(self) -> int:
        return self.beta.numerator

    @property
    def b2(self) -> int:
        return self.beta.denominator

    @property
    def height(self) -> int:
        return height(self)

    def __str__(self) -> str:
        return f"{self.alpha} {self.beta}"


@dataclass(frozen=True)
class PythTriple:
    A: int
    B: int
    C: int

    def __post_init__(self):
        if min(self.A, self.B, self.C) < 1:
            raise InvariantError(f"triple entries must be positive: {self}")
        if self.A % 2 == 0 or self.B % 2:
            raise InvariantError(f"need A odd and B even: {self}")
        if self.A ** 2 + self.B ** 2 != self.C ** 2 or gcd(self.A, self.B) != 1:
            raise InvariantError(f"not a primitive Pythagorean triple: {self}")


@dataclass(frozen=True)
class PQPair:
    P: int
    Q: int

    def __post_init__(self):
        report = validate_pq(self.P, self.Q)
        if not report.ok:
            raise InvariantError(f"invalid pair ({self.P}, {self.Q}): {', '.join(report.failures)}")

    def triple(self) -> PythTriple:
        P, Q = self.P, self.Q
        return PythTriple(P * P - Q * Q, 2 * P * Q, P * P + Q * Q)


@dataclass(frozen=True)
class CompressedPQ:
    """``P = P0 * P1**2`` and ``Q = Q0 * Q1**2`` with ``P0``, ``Q0`` squarefree."""

    P0: int
    P1: int
    Q0: int
    Q1: int

    @property
    def P(self) -> int:
        return self.P0 * self.P1 ** 2

    @property
    def Q(self) -> int:
        return self.Q0 * self.Q1 ** 2


def validate_pq(P: int, Q: int) -> Report:
    """Check ``P > Q >= 1``, ``gcd(P, Q) = 1`` and opposite parity."""
    report = Report()
    report.check("order", P > Q >= 1)
    report.check("coprime", gcd(P, Q) == 1)
    report.check("opposite_parity", (P - Q) % 2 == 1)
    return report


def sides_report(sides: TriangleSides) -> Report:
    """Coprimality and parity conditions that hold for squarefree ``N``."""
    report = Report()
    report.check("numerators_coprime", gcd(sides.a1, sides.b1) == 1)
    report.check("denominators_coprime", gcd(sides.a2, sides.b2) == 1)
    report.check("numerators_opposite_parity", (sides.a1 + sides.b1) % 2 == 1)
    report.check("a2_divides_b1", sides.b1 % sides.a2 == 0)
    report.check("b2_divides_a1", sides.a1 % sides.b2 == 0)
    return report


def pq_to_sides(N: int, pq: PQPair) -> TriangleSides:
    """Legs of the triangle for ``N`` encoded by ``(P, Q)``.

    >>> str(pq_to_sides(5, PQPair(5, 4)))
    '3/2 20/3'
    """
    P, Q = pq.P, pq.Q
    A = P * P - Q * Q
    B = 2 * P * Q
    AB = A * B
    if AB % (2 * N):
        raise NotRepresentedError(f"({P}, {Q}) does not represent {N}: 2N does not divide AB")
    D = exact_sqrt(AB // (2 * N))
    if D is None:
        raise NotRepresentedError(f"({P}, {Q}) does not represent {N}: AB/2N is not a square")
    return TriangleSides.from_legs(N, Fraction(A, D), Fraction(B, D))


def sides_to_pq(sides: TriangleSides) -> PQPair:
    report = sides_report(sides)
    if not report.ok:
        raise InvariantError(f"malformed sides {sides}: {', '.join(report.failures)}")
    A, B = sides.a1 * sides.b2, sides.a2 * sides.b1
    if A % 2 == 0:
        A, B = B, A
    C = exact_sqrt(A * A + B * B)
    if C is None:
        raise InvariantError(f"{A}, {B} is not a Pythagorean pair")
    P = exact_sqrt((C + A) // 2)
    Q = exact_sqrt((C - A) // 2)
    if P is None or Q is None:
        raise InvariantError(f"triple ({A}, {B}, {C}) is not primitive")
    return PQPair(P, Q)


def compress_pq(pq: PQPair, N: int) -> CompressedPQ:
    """Squarefree decomposition of ``P`` and ``Q``; ``P0 * Q0`` must divide ``N``."""
    P0, P1 = squarefree_part(pq.P)
    Q0, Q1 = squarefree_part(pq.Q)
    if N % (P0 * Q0):
        raise InvariantError(f"P0*Q0 = {P0 * Q0} does not divide N = {N}")
    return CompressedPQ(P0, P1, Q0, Q1)


def height(sides: TriangleSides) -> int:
    """``max(a1, b1)``, which always equals the max over all four terms."""
    h = max(sides.a1, sides.b1)
    if h != max(sides.a1, sides.a2, sides.b1, sides.b2):
        raise InvariantError(f"denominator exceeds both numerators in {sides}")
    return h
