"""Multiplication operators, their adjoints, and the twisted pair.

Run: python3 demos/02_heisenberg.py
"""

from fractions import Fraction

from fockspace import skew, twisted_adj, twisted_mul
from fockspace.dsl import parse_operator
from fockspace.fock import evaluate, state, vacuum
from fockspace.symfunc import e, format_elt, h, hall_inner, mul, p, twist

v = state(2, 1)
print("state:", format_elt(v))

print("\nPower sums: p_2* p_2 - p_2 p_2* acts as 2 times the identity")
op = parse_operator("adj(p[2])*mul(p[2]) - mul(p[2])*adj(p[2])")
print("  result:", format_elt(evaluate(op, v, 0)))

print("\nMultiplication then skewing by the same power sum:")
print("  p_2 * s[2,1]      =", format_elt(mul(p(2), v)))
print("  p_2^perp s[4,1]   =", format_elt(skew(p(2), state(4, 1))))

for q in (2, 3):
    print(f"\nTwisted pair at p={q}: s_1 = e_1(x^{q}), t_1 = adjoint of h_1(x^{q})")
    one = vacuum()
    up = twisted_mul(1, one, q)
    print("  s_1 . 1     =", format_elt(up))
    print("  t_1 s_1 . 1 =", format_elt(twisted_adj(1, up, q)))
    print("  <e_1(x^p), h_1(x^p)> =", hall_inner(twist(e(1), q), twist(h(1), q)))

print("\nOn any state, t_1 s_1 - s_1 t_1 is binom(p,1) times the identity (p=2):")
w = state(3, 1) + Fraction(1, 2) * state(2)
lhs = twisted_adj(1, twisted_mul(1, w, 2), 2) - twisted_mul(1, twisted_adj(1, w, 2), 2)
print("  w              =", format_elt(w))
print("  t_1 s_1 - s_1 t_1 on w =", format_elt(lhs))
