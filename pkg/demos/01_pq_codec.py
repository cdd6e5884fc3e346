"""
Sides, (P, Q) parameters and their compressed form
===================================================

A congruent number N is the area of a right triangle with rational legs.
Each such triangle corresponds to a coprime pair P > Q of opposite parity.
"""
from fractions import Fraction

from congruent import PQPair, TriangleSides, compress_pq, pq_to_sides, sides_to_pq, validate_pq

# N = 5 is the area of the 3/2, 20/3, 41/6 triangle
sides = TriangleSides.from_legs(5, Fraction(3, 2), Fraction(20, 3))
print("legs", sides.alpha, sides.beta, "hypotenuse", sides.gamma)

pq = sides_to_pq(sides)
print("P, Q =", pq.P, pq.Q)

# going back recovers the same legs
print("decoded:", pq_to_sides(5, pq))

# the height is the largest numerator or denominator of the two legs
print("height:", sides.height)

# large parameters compress to P0 * P1^2 and Q0 * Q1^2 with P0 * Q0 dividing N
big = PQPair(1873180325, 1158313156)
c = compress_pq(big, 53)
print(f"P = {c.P0} * {c.P1}^2, Q = {c.Q0} * {c.Q1}^2")
print(pq_to_sides(53, big))

# both parameters odd can never come from a primitive Pythagorean triple
print(validate_pq(2608225, 4489).failures)
