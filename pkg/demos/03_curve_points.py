"""
Points on y^2 = x^3 - N^2 x
============================

Doubling a rational point produces a triangle of area N.  Halving goes the
other way, and chains of halvings give division points of order 2, 4, 8.
"""
from congruent import (
    GeneratorSet,
    add,
    double_affine,
    halve,
    make_point,
    min_height_select,
    point_to_sides,
    scalar_mul,
    sides_to_point,
    small_division_search,
    torsion_points,
)

p = make_point(5, -4, 6)
twice, tau = double_affine(5, p)
print("2p =", twice, "tau =", tau)
print("chord-tangent agrees:", twice == add(p, p))
print("triangle from p:", point_to_sides(5, p))

# a point built from a triangle lands back on the curve
q = sides_to_point(point_to_sides(5, p))
print("point from triangle:", q)

# every half of 2p differs from p by a torsion point
for h in halve(5, twice):
    print("half:", h)
print("torsion:", [str(t) for t in torsion_points(5)])

# 8p is found to be divisible by 8
k, d = small_division_search(5, scalar_mul(8, p), kmax=10)
print("divisible by", k, "with quotient", d)

# minimal-height selection over externally supplied generators; 3p is not
# divisible by 2, and odd division is not searched, so nothing improves here
g = scalar_mul(3, p)
print("from 3p:", point_to_sides(5, g))
print("selected:", min_height_select(5, GeneratorSet(5, (g,))))
