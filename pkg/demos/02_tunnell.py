"""
Tunnell's test
==============

Counting integer points on two ternary quadratic forms decides which
squarefree numbers are congruent (conditionally on BSD in one direction).
"""
from congruent.tunnell import congruent_numbers, tunnell_test

for n in (1, 2, 3, 5, 6, 7):
    v = tunnell_test(n)
    print(n, "congruent" if v.congruent else "not congruent",
          f"(counts {v.small_count} vs {v.large_count})")

print(congruent_numbers(1, 100))
