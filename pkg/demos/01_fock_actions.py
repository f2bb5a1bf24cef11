"""Boxes of a given residue: the Kac-Moody generators on Schur functions.

Run: python3 demos/01_fock_actions.py
"""

from fockspace import apply_e, apply_f, apply_h, weight_label
from fockspace.fock import state, vacuum
from fockspace.partitions import Partition, format_partition
from fockspace.symfunc import format_elt

p = 3
v = vacuum()
print(f"p = {p}; start from the vacuum s[] and add boxes with f_i")
for i in (0, 1, 2, 0):
    v = apply_f(i, v, p)
    print(f"  after f_{i}: {format_elt(v)}")

lam = state(2)
print("\nf_2 on s[2] adds the two residue-2 corners:", format_elt(apply_f(2, lam, p)))
print("e_2 undoes one of them on s[2,1]:", format_elt(apply_e(2, state(2, 1), p)))

print("\nh_i is diagonal; compare it with the commutator e_i f_i - f_i e_i on s[3,1]:")
w = state(3, 1)
for i in range(p):
    comm = apply_e(i, apply_f(i, w, p), p) - apply_f(i, apply_e(i, w, p), p)
    print(f"  h_{i}: {format_elt(apply_h(i, w, p)):>12}   commutator: {format_elt(comm)}")

print("\nEvery term of f_1 s[3,1] has its residue label shifted by one at residue 1:")
print("  label of [3,1]:", weight_label(Partition([3, 1]), p).vector())
for mu in apply_f(1, w, p).terms:
    print(f"  label of {format_partition(mu)}:", weight_label(mu, p).vector())
