"""Rational points on the congruent number curve ``y^2 = x^3 - N^2 x``.

Doubling a point gives a triangle of area ``N``: if ``2p = (x', y')`` then
``x' + N`` and ``x' - N`` are rational squares and the legs are
``sqrt(x'+N) -/+ sqrt(x'-N)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import exact_sqrt, exact_sqrt_fraction
from .pq_codec import InvariantError, TriangleSides

__all__ = [
    "CurveError",
    "CurvePoint",
    "GeneratorSet",
    "make_point",
    "infinity",
    "torsion_points",
    "is_torsion",
    "add",
    "neg",
    "sub",
    "double_affine",
    "scalar_mul",
    "point_to_sides",
    "sides_to_point",
    "halve",
    "small_division_search",
    "sides_key",
    "min_height_select",
]


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    """A rational point on ``E_N``; ``x is None`` marks the point at infinity."""

    N: int
    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


@dataclass(frozen=True)
class GeneratorSet:
    N: int
    points: tuple[CurvePoint, ...]

    def __post_init__(self):
        for p in self.points:
            if p.N != self.N:
                raise CurveError(f"point {p} is not on E_{self.N}")
            if is_torsion(p):
                raise CurveError(f"generator {p} is a torsion point")


def on_curve(N: int, x: Fraction, y: Fraction) -> bool:
    return y * y == x ** 3 - N * N * x


def make_point(N: int, x, y) -> CurvePoint:
    x, y = Fraction(x), Fraction(y)
    if not on_curve(N, x, y):
        raise CurveError(f"({x}, {y}) is not on y^2 = x^3 - {N * N}x")
    return CurvePoint(N, x, y)


def infinity(N: int) -> CurvePoint:
    return CurvePoint(N)


def torsion_points(N: int) -> list[CurvePoint]:
    zero = Fraction(0)
    return [CurvePoint(N), CurvePoint(N, zero, zero),
            CurvePoint(N, Fraction(N), zero), CurvePoint(N, Fraction(-N), zero)]


def is_torsion(p: CurvePoint) -> bool:
    return p.is_infinity or p.y == 0


def neg(p: CurvePoint) -> CurvePoint:
    return p if p.is_infinity else CurvePoint(p.N, p.x, -p.y)


def add(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    if p.N != q.N:
        raise CurveError(f"cannot add points on E_{p.N} and E_{q.N}")
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    N = p.N
    if p.x == q.x:
        if p.y != q.y or p.y == 0:
            return CurvePoint(N)
        lam = (3 * p.x * p.x - N * N) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    return CurvePoint(N, x3, lam * (p.x - x3) - p.y)


def sub(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    return add(p, neg(q))


def double_affine(N: int, p: CurvePoint) -> tuple[CurvePoint, int]:
    """Double ``p`` through the integer form of the tangent formula.

    With ``x = s/t`` and ``y = u/v`` in lowest terms::

        x' = (v^2 (3s^2 - t^2 N^2)^2 - 8 s u^2 t^3) / (2 u t^2)^2

    Returns the doubled point and ``tau = 2 u t^2``, the square root of the
    unreduced denominator of ``x'``.  Torsion input doubles to infinity with
    ``tau = 0``.
    """
    if p.N != N:
        raise CurveError(f"point {p} is not on E_{N}")
    if is_torsion(p):
        return CurvePoint(N), 0
    s, t = p.x.numerator, p.x.denominator
    u, v = p.y.numerator, p.y.denominator
    tau = 2 * u * t * t
    s2 = v * v * (3 * s * s - t * t * N * N) ** 2 - 8 * s * u * u * t ** 3
    x2 = Fraction(s2, tau * tau)
    lam = Fraction(v * (3 * s * s - t * t * N * N), tau)
    return CurvePoint(N, x2, lam * (p.x - x2) - p.y), tau


def scalar_mul(k: int, p: CurvePoint) -> CurvePoint:
    if k < 0:
        return scalar_mul(-k, neg(p))
    result = CurvePoint(p.N)
    addend = p
    while k:
        if k & 1:
            result = add(result, addend)
        addend = add(addend, addend)
        k >>= 1
    return result


def point_to_sides(N: int, p: CurvePoint) -> TriangleSides:
    """Triangle of area ``N`` attached to ``2p``.

    >>> str(point_to_sides(5, make_point(5, -4, 6)))
    '3/2 20/3'
    """
    if is_torsion(p):
        raise CurveError(f"torsion point {p} gives no triangle")
    if not on_curve(N, p.x, p.y):
        raise CurveError(f"{p} is not on E_{N}")
    s, t = p.x.numerator, p.x.denominator
    u, v = p.y.numerator, p.y.denominator
    tau = 2 * u * t * t
    s2 = v * v * (3 * s * s - t * t * N * N) ** 2 - 8 * s * u * u * t ** 3
    t2 = tau * tau
    plus = exact_sqrt(s2 + N * t2)
    minus = exact_sqrt(s2 - N * t2) if s2 >= N * t2 else None
    if plus is None or minus is None:
        raise InvariantError(f"x(2p) -/+ N is not a square for p = {p}")
    tau = abs(tau)
    return TriangleSides.from_legs(N, Fraction(plus - minus, tau), Fraction(plus + minus, tau))


def sides_to_point(sides: TriangleSides) -> CurvePoint:
    """Point ``(N(a+c)/b, 2N^2(a+c)/b^2)`` on ``E_N`` for legs ``a, b`` and hypotenuse ``c``."""
    N, a, b, c = sides.N, sides.alpha, sides.beta, sides.gamma
    return make_point(N, N * (a + c) / b, 2 * N * N * (a + c) / (b * b))


def halve(N: int, r: CurvePoint) -> list[CurvePoint]:
    """All rational ``q`` with ``2q = r``.

    Uses the complete 2-descent criterion for a curve with full rational
    2-torsion: ``r`` is a double exactly when ``x - 0``, ``x - N`` and
    ``x + N`` are all rational squares, and then the halves have
    ``x_q = x + r1 r2 + r1 r3 + r2 r3`` over the sign choices of the roots.
    """
    if r.N != N:
        raise CurveError(f"point {r} is not on E_{N}")
    if r.is_infinity:
        return torsion_points(N)
    roots = [exact_sqrt_fraction(r.x - e) for e in (0, N, -N)]
    if any(root is None for root in roots):
        return []
    r1, r2, r3 = roots
    xs = {r.x + a * b + a * c + b * c
          for a, b, c in ((r1, r2, r3), (-r1, r2, r3), (r1, -r2, r3), (r1, r2, -r3))}
    halves = []
    for x in sorted(xs):
        y = exact_sqrt_fraction(x ** 3 - N * N * x)
        if y is None:
            continue
        for cand in {y, -y}:
            q = CurvePoint(N, x, cand)
            if double_affine(N, q)[0] == r:
                halves.append(q)
    return sorted(halves, key=_point_order)


def _point_order(p: CurvePoint):
    return (p.x, p.y) if not p.is_infinity else (Fraction(-10**100), Fraction(0))


def sides_key(sides: TriangleSides) -> tuple[int, int, int]:
    """Ordering used to pick among candidate triangles: height, then a1, then a2."""
    return sides.height, sides.a1, sides.a2


def _best_point(N: int, points) -> CurvePoint:
    return min(points, key=lambda q: (sides_key(point_to_sides(N, q)), _point_order(q)))


def small_division_search(N: int, g: CurvePoint, kmax: int = 10) -> tuple[int, CurvePoint]:
    """Deepest ``k = 2^j <= kmax`` with ``k q = g + t`` for some torsion ``t``.

    Returns ``(1, g)`` when no torsion translate of ``g`` is divisible by 2.
    Among the points found at the deepest level, the one giving the
    lowest-height triangle is returned.  Odd ``k`` is not searched.
    """
    if is_torsion(g):
        raise CurveError(f"division search needs a non-torsion point, got {g}")
    frontier = [add(g, t) for t in torsion_points(N)]
    k, found = 1, [g]
    while 2 * k <= kmax:
        nxt = []
        for h in frontier:
            nxt.extend(halve(N, h))
        if not nxt:
            break
        k *= 2
        found = frontier = nxt
    return k, _best_point(N, found)


def min_height_select(N: int, gens: GeneratorSet, kmax: int = 10) -> TriangleSides:
    """Lowest-height triangle over ``g_i``, ``g_i +/- g_j`` and division points of each ``g_i``."""
    if not gens.points:
        raise CurveError("min_height_select needs at least one generator")
    candidates = list(gens.points)
    for gi, gj in combinations(gens.points, 2):
        candidates.append(add(gi, gj))
        candidates.append(sub(gi, gj))
    for g in gens.points:
        k, q = small_division_search(N, g, kmax)
        if k > 1:
            candidates.append(q)
    sides = [point_to_sides(N, c) for c in candidates if not is_torsion(c)]
    if not sides:
        raise CurveError(f"every candidate point on E_{N} is torsion")
    return min(sides, key=sides_key)
