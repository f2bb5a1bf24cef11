"""The vacuum orbit under the f_i and its graded dimension.

Run: python3 demos/03_basic_representation.py
"""

from fockspace import basic_rep_span
from fockspace.fock import apply_e, span_contains
from fockspace.symfunc import format_elt
from fockspace.verify import character_oracle

for p in (2, 3):
    layers = basic_rep_span(p, 8)
    dims = [len(layer) for layer in layers]
    print(f"p={p}: dimensions {dims}")
    print(f"      predicted  {character_oracle(p, 8)}")

layers = basic_rep_span(2, 4)
print("\nA basis in degrees 0..4 for p=2:")
for n, layer in enumerate(layers):
    for v in layer:
        print(f"  {n}: {format_elt(v)}")

print("\nThe span is stable: e_i of a degree-4 vector lies in degree 3")
for v in layers[4]:
    for i in range(2):
        w = apply_e(i, v, 2)
        print(f"  e_{i}({format_elt(v)}) in span: {span_contains(layers[3], w)}")
