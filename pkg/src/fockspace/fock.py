"""Operators on Fock space.

A Fock state is a :class:`SymElt` in the Schur basis.  This module provides

* the Kac-Moody generators ``e_i, f_i, h_i, d`` acting by removing/adding boxes
  of a given residue,
* multiplication operators and their adjoints (the Heisenberg algebra),
* twisted multiplication and twisted adjoints for ``p >= 2``,
* a small operator-expression tree with an evaluator,
* block labels and the span of the vacuum under the ``f_i``.

Indices ``i`` are integers; when ``p >= 2`` they are read modulo ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

from .linalg import Echelon
from .partitions import (
    Partition,
    WeightLabel,
    addable_cells,
    addable_i_boxes,
    content,
    reduce_index,
    removable_cells,
    removable_i_boxes,
    residue_counts,
)
from .symfunc import S, SymElt, e, h, mul, skew, to_schur, twist_power

__all__ = [
    "FockElt", "vacuum", "state", "apply_e", "apply_f", "apply_h", "apply_d",
    "mul_by", "adj_by", "twisted_mul", "twisted_adj", "weight_label",
    "basic_rep_span", "span_contains", "Operators", "EvaluationError", "evaluate",
    "E", "F", "Hgen", "Dgen", "MulBy", "AdjBy", "TwistMulBy", "TwistAdjBy",
    "Identity", "Compose", "Sum", "Scale", "WeightLabel",
]

FockElt = SymElt


def vacuum() -> SymElt:
    return SymElt.one(S)


def state(*parts) -> SymElt:
    return SymElt.monomial(S, Partition(parts))


def _check_p(p: int) -> None:
    if p < 0 or p == 1:
        raise ValueError(f"p must be 0 or at least 2, got {p}")


def _check_twisted(p: int) -> None:
    if p < 2:
        raise ValueError(f"twisted operators need p >= 2, got {p}")


def _linear(v: SymElt, on_basis: Callable[[Partition], dict | Sequence]) -> SymElt:
    if v.basis is not S:
        v = to_schur(v)
    acc: dict[Partition, Fraction] = {}
    for lam, c in v.items():
        image = on_basis(lam)
        pairs = image.items() if isinstance(image, dict) else image
        for mu, d in pairs:
            acc[mu] = acc.get(mu, 0) + c * d
    return SymElt(S, acc)


# --- Kac-Moody generators ---------------------------------------------------

@lru_cache(maxsize=None)
def _f_basis(i: int, lam: Partition, p: int):
    return tuple((mu, 1) for mu in addable_i_boxes(lam, i, p))


@lru_cache(maxsize=None)
def _e_basis(i: int, lam: Partition, p: int):
    return tuple((mu, 1) for mu in removable_i_boxes(lam, i, p))


def h_eigenvalue(i: int, lam: Partition, p: int) -> int:
    """``#(addable i-boxes) - #(removable i-boxes)`` of ``lam``."""
    i = reduce_index(i, p)
    add = sum(1 for c in addable_cells(lam) if reduce_index(content(c), p) == i)
    rem = sum(1 for c in removable_cells(lam) if reduce_index(content(c), p) == i)
    return add - rem


def apply_f(i: int, v: SymElt, p: int) -> SymElt:
    _check_p(p)
    return _linear(v, lambda lam: _f_basis(reduce_index(i, p), lam, p))


def apply_e(i: int, v: SymElt, p: int) -> SymElt:
    _check_p(p)
    return _linear(v, lambda lam: _e_basis(reduce_index(i, p), lam, p))


def apply_h(i: int, v: SymElt, p: int) -> SymElt:
    _check_p(p)
    return _linear(v, lambda lam: {lam: h_eigenvalue(i, lam, p)})


def apply_d(v: SymElt, p: int) -> SymElt:
    """Scale ``s_lam`` by its number of residue-0 boxes."""
    _check_p(p)
    return _linear(v, lambda lam: {lam: residue_counts(lam, p)[0]})


# --- Heisenberg and twisted Heisenberg --------------------------------------

def mul_by(b: SymElt, v: SymElt) -> SymElt:
    return mul(b, v)


def adj_by(b: SymElt, v: SymElt) -> SymElt:
    return skew(b, v)


def twisted_mul(n: int, v: SymElt, p: int) -> SymElt:
    """Multiplication by the twisted elementary function ``e_n(x^p)``."""
    _check_twisted(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return mul(twist_power(e(n) if n else SymElt.one(), p), v)


def twisted_adj(n: int, v: SymElt, p: int) -> SymElt:
    """Adjoint of multiplication by the twisted complete function ``h_n(x^p)``."""
    _check_twisted(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return skew(twist_power(h(n) if n else SymElt.one(), p), v)


# --- blocks -----------------------------------------------------------------

def weight_label(lam: Partition, p: int) -> WeightLabel:
    return residue_counts(lam, p)


# --- operator expressions ---------------------------------------------------

class EvaluationError(ValueError):
    """A leaf could not be evaluated for the requested ``p``."""

    def __init__(self, leaf, message: str):
        super().__init__(f"{leaf!r}: {message}")
        self.leaf = leaf


class OperatorExpr:
    """Base class for operator trees.  ``a @ b`` composes (``b`` acts first)."""

    def __matmul__(self, other):
        return Compose(self, other)

    def __add__(self, other):
        return Sum((self, other))

    def __sub__(self, other):
        return Sum((self, Scale(Fraction(-1), other)))

    def __rmul__(self, c):
        return Scale(Fraction(c), self)

    def __neg__(self):
        return Scale(Fraction(-1), self)


@dataclass(frozen=True)
class E(OperatorExpr):
    i: int


@dataclass(frozen=True)
class F(OperatorExpr):
    i: int


@dataclass(frozen=True)
class Hgen(OperatorExpr):
    i: int


@dataclass(frozen=True)
class Dgen(OperatorExpr):
    pass


@dataclass(frozen=True)
class Identity(OperatorExpr):
    pass


@dataclass(frozen=True)
class MulBy(OperatorExpr):
    b: SymElt


@dataclass(frozen=True)
class AdjBy(OperatorExpr):
    b: SymElt


@dataclass(frozen=True)
class TwistMulBy(OperatorExpr):
    b: SymElt


@dataclass(frozen=True)
class TwistAdjBy(OperatorExpr):
    b: SymElt


@dataclass(frozen=True)
class Compose(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr


@dataclass(frozen=True)
class Sum(OperatorExpr):
    terms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class Scale(OperatorExpr):
    c: Fraction
    child: OperatorExpr

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


Leaf = Union[E, F, Hgen, Dgen, Identity, MulBy, AdjBy, TwistMulBy, TwistAdjBy]


class Operators:
    """Leaf semantics used by :func:`evaluate`.

    Subclass and override a method to evaluate the same expressions against a
    deliberately altered generator (the negative controls in ``verify`` do
    this).
    """

    def e(self, i: int, v: SymElt, p: int) -> SymElt:
        return apply_e(i, v, p)

    def f(self, i: int, v: SymElt, p: int) -> SymElt:
        return apply_f(i, v, p)

    def h(self, i: int, v: SymElt, p: int) -> SymElt:
        return apply_h(i, v, p)

    def d(self, v: SymElt, p: int) -> SymElt:
        return apply_d(v, p)

    def mul(self, b: SymElt, v: SymElt) -> SymElt:
        return mul_by(b, v)

    def adj(self, b: SymElt, v: SymElt) -> SymElt:
        return adj_by(b, v)

    def tmul(self, b: SymElt, v: SymElt, p: int) -> SymElt:
        return self.mul(twist_power(b, p), v)

    def tadj(self, b: SymElt, v: SymElt, p: int) -> SymElt:
        return self.adj(twist_power(b, p), v)


STANDARD = Operators()


def _eval_leaf(x: Leaf, v: SymElt, p: int, ops: Operators) -> SymElt:
    if isinstance(x, Identity):
        return v
    if isinstance(x, E):
        return ops.e(x.i, v, p)
    if isinstance(x, F):
        return ops.f(x.i, v, p)
    if isinstance(x, Hgen):
        return ops.h(x.i, v, p)
    if isinstance(x, Dgen):
        return ops.d(v, p)
    if isinstance(x, MulBy):
        return ops.mul(x.b, v)
    if isinstance(x, AdjBy):
        return ops.adj(x.b, v)
    if isinstance(x, (TwistMulBy, TwistAdjBy)):
        if p < 2:
            raise EvaluationError(x, f"twisted operators need p >= 2, got p={p}")
        if isinstance(x, TwistMulBy):
            return ops.tmul(x.b, v, p)
        return ops.tadj(x.b, v, p)
    raise TypeError(f"not an operator expression: {x!r}")


def evaluate(expr: OperatorExpr, v: SymElt, p: int, ops: Operators = STANDARD) -> SymElt:
    """Apply ``expr`` to the state ``v``.

    ``Compose(A, B)`` applies ``B`` first.  Leaves whose preconditions fail
    for this ``p`` raise :class:`EvaluationError` naming the leaf.
    """
    if p < 0 or p == 1:
        raise EvaluationError(expr, f"p must be 0 or at least 2, got p={p}")
    if v.basis is not S:
        v = to_schur(v)
    return _evaluate(expr, v, p, ops)


def _evaluate(expr, v, p, ops):
    if isinstance(expr, Compose):
        return _evaluate(expr.left, _evaluate(expr.right, v, p, ops), p, ops)
    if isinstance(expr, Sum):
        out = SymElt(S)
        for t in expr.terms:
            out = out + _evaluate(t, v, p, ops)
        return out
    if isinstance(expr, Scale):
        return _evaluate(expr.child, v, p, ops).scale(expr.c)
    return _eval_leaf(expr, v, p, ops)


# --- the basic representation ----------------------------------------------

def basic_rep_span(p: int, max_degree: int, ops: Operators = STANDARD) -> list[list[SymElt]]:
    """Graded basis of ``U(g) . 1`` up to ``max_degree``.

    Degree ``n`` is spanned by ``f_{i_1} ... f_{i_n} s_empty`` over all residue
    sequences; equivalently by ``f_i`` applied to a basis of degree ``n-1``,
    which is what is enumerated.  Each degree comes back in reduced echelon
    form with pivots on the lexicographically largest partitions.
    """
    if p < 2:
        raise ValueError("basic_rep_span needs p >= 2")
    layers = [[vacuum()]]
    for n in range(1, max_degree + 1):
        ech = Echelon()
        for v in layers[-1]:
            for i in range(p):
                w = ops.f(i, v, p)
                if w:
                    ech.add(w.terms)
        layers.append([SymElt(S, row) for row in ech.rows()])
    return layers[: max_degree + 1]


def span_contains(basis: Sequence[SymElt], v: SymElt) -> bool:
    """Exact membership test of ``v`` in the span of ``basis``."""
    ech = Echelon()
    for b in basis:
        ech.add(b.terms)
    return ech.contains(to_schur(v).terms)
