from math import gcd, prod

from hypothesis import strategies as st

from congruent.core import factor


@st.composite
def primitive_pairs(draw, max_p=5000):
    P = draw(st.integers(2, max_p))
    Q = draw(st.integers(1, P - 1))
    if (P - Q) % 2 == 0:
        Q = Q - 1 if Q > 1 else Q + 1
    if gcd(P, Q) != 1:
        Q = 1 if P % 2 == 0 else 2
        if Q >= P:
            Q = 1
    return P, Q


def represented_n(P, Q):
    """Squarefree part of P Q (P - Q)(P + Q), factoring the product directly."""
    return prod(p for p, e in factor(P * Q * (P - Q) * (P + Q)).items() if e % 2)
