"""Exact symbolic Fock space of symmetric functions.

Modules:

``partitions``  Young diagrams, residues, rim hooks, p-cores.
``symfunc``     symmetric functions in the s/e/h/p bases, Hall pairing, skewing, twist.
``fock``        Kac-Moody, Heisenberg and twisted Heisenberg operators; operator trees.
``verify``      exhaustive identity checks with negative controls.
``dsl``, ``cli`` text syntax and the ``fockspace`` command.
"""

from .partitions import Cell, Partition, WeightLabel, p_core_and_quotient, residue_counts
from .symfunc import Basis, SymElt, e, from_schur, h, hall_inner, mul, p, s, skew, to_schur, twist
from .fock import (
    apply_d,
    apply_e,
    apply_f,
    apply_h,
    basic_rep_span,
    evaluate,
    twisted_adj,
    twisted_mul,
    vacuum,
    weight_label,
)

__version__ = "0.1.0"

__all__ = [
    "Cell", "Partition", "WeightLabel", "p_core_and_quotient", "residue_counts",
    "Basis", "SymElt", "e", "from_schur", "h", "hall_inner", "mul", "p", "s", "skew",
    "to_schur", "twist",
    "apply_d", "apply_e", "apply_f", "apply_h", "basic_rep_span", "evaluate",
    "twisted_adj", "twisted_mul", "vacuum", "weight_label",
]
