"""The ring of symmetric functions over the rationals.

Elements are sparse linear combinations in one of four bases: Schur ``s``,
elementary ``e``, complete homogeneous ``h`` and power sums ``p``.  Every ring
operation normalizes to the Schur basis.  Coefficients are ``Fraction``s
throughout; nothing is ever rounded.

Products with a Schur function go through Jacobi-Trudi (expanding one factor
into complete or elementary products) followed by repeated Pieri steps, so the
only hard-coded combinatorial rules are the two Pieri rules and the
Murnaghan-Nakayama rule for power sums.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .partitions import (
    EMPTY,
    Partition,
    format_partition,
    partitions_of,
    rim_hook_additions,
    rim_hook_removals,
    z_value,
)

Number = Union[int, Fraction]


class Basis(enum.Enum):
    SCHUR = "s"
    ELEMENTARY = "e"
    COMPLETE = "h"
    POWER = "p"

    @property
    def letter(self) -> str:
        return self.value

    @classmethod
    def coerce(cls, tag) -> Basis:
        if isinstance(tag, cls):
            return tag
        for b in cls:
            if tag in (b.value, b.name.lower()):
                return b
        raise ValueError(f"unknown basis {tag!r}")


S, E, H, P = Basis.SCHUR, Basis.ELEMENTARY, Basis.COMPLETE, Basis.POWER


def _term_key(item):
    lam = item[0]
    return (lam.size, tuple(-x for x in lam))


class SymElt:
    """Immutable sparse symmetric function in a single basis.

    Terms are kept in canonical order: by degree, then lexicographically
    descending within a degree.  Equality is structural (same basis, same
    terms); use :func:`same_element` to compare across bases.
    """

    __slots__ = ("basis", "_items", "_hash")

    def __init__(self, basis, terms: Mapping[Partition, Number] | Iterable = ()):
        self.basis = Basis.coerce(basis)
        acc: dict[Partition, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            acc[lam] = acc.get(lam, 0) + Fraction(c)
        self._items = tuple(sorted(((k, v) for k, v in acc.items() if v), key=_term_key))
        self._hash = None

    @classmethod
    def monomial(cls, basis, lam, coeff: Number = 1) -> SymElt:
        return cls(basis, [(lam, coeff)])

    @classmethod
    def zero(cls, basis=S) -> SymElt:
        return cls(basis)

    @classmethod
    def one(cls, basis=S) -> SymElt:
        return cls(basis, [(EMPTY, 1)])

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._items)

    def items(self):
        return iter(self._items)

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def coeff(self, lam) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def degrees(self) -> set[int]:
        return {lam.size for lam, _ in self._items}

    @property
    def degree(self) -> int:
        """Largest degree among the terms (``-1`` for zero)."""
        return max((lam.size for lam, _ in self._items), default=-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self._items)

    def __eq__(self, other):
        if not isinstance(other, SymElt):
            return NotImplemented
        return self.basis is other.basis and self._items == other._items

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, self._items))
        return self._hash

    def __repr__(self):
        return f"SymElt({self.basis.letter!r}, {format_elt(self)!r})"

    def __str__(self):
        return format_elt(self)

    def __neg__(self):
        return SymElt(self.basis, [(k, -v) for k, v in self._items])

    def __add__(self, other):
        if not isinstance(other, SymElt):
            return NotImplemented
        if other.basis is not self.basis:
            return to_schur(self) + to_schur(other)
        return SymElt(self.basis, list(self._items) + list(other._items))

    def __sub__(self, other):
        if not isinstance(other, SymElt):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymElt):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Number) -> SymElt:
        return SymElt(self.basis, [(k, v * c) for k, v in self._items])


def s(*parts) -> SymElt:
    return SymElt.monomial(S, Partition(parts))


def e(*parts) -> SymElt:
    return SymElt.monomial(E, Partition(sorted(parts, reverse=True)))


def h(*parts) -> SymElt:
    return SymElt.monomial(H, Partition(sorted(parts, reverse=True)))


def p(*parts) -> SymElt:
    return SymElt.monomial(P, Partition(sorted(parts, reverse=True)))


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_elt(x: SymElt) -> str:
    """Text form such as ``s[2,1] - 1/2*s[2]``; the zero element prints ``0``."""
    if not x:
        return "0"
    chunks = []
    for n, (lam, c) in enumerate(x.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = f"{x.basis.letter}{format_partition(lam)}"
        if mag != 1:
            body = f"{format_coeff(mag)}*{body}"
        if n == 0:
            chunks.append(body if sign == "+" else f"-{body}")
        else:
            chunks.append(f"{sign} {body}")
    return " ".join(chunks)


def to_json(x: SymElt) -> dict:
    return {
        "basis": x.basis.name.lower(),
        "terms": [
            {"partition": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
            for lam, c in x.items()
        ],
    }


def from_json(obj: Mapping) -> SymElt:
    return SymElt(
        obj["basis"],
        [(Partition(t["partition"]), Fraction(int(t["num"]), int(t["den"]))) for t in obj["terms"]],
    )


# --- Pieri and Murnaghan-Nakayama on single Schur functions ----------------

@lru_cache(maxsize=None)
def _horizontal_strips(lam: Partition, r: int) -> tuple[Partition, ...]:
    """All ``mu`` with ``mu / lam`` a horizontal strip of ``r`` boxes."""
    out = []
    rows = list(lam) + [0]

    def rec(k, left, acc):
        if k == len(rows):
            if left == 0:
                out.append(Partition(acc))
            return
        cap = left if k == 0 else min(left, rows[k - 1] - rows[k])
        for add in range(cap, -1, -1):
            rec(k + 1, left - add, acc + [rows[k] + add])

    rec(0, r, [])
    return tuple(out)


@lru_cache(maxsize=None)
def _vertical_strips(lam: Partition, r: int) -> tuple[Partition, ...]:
    return tuple(mu.conjugate() for mu in _horizontal_strips(lam.conjugate(), r))


def _pieri_step(vec: dict, strips, r: int) -> dict:
    out: dict[Partition, Fraction] = {}
    for lam, c in vec.items():
        for mu in strips(lam, r):
            out[mu] = out.get(mu, 0) + c
    return out


def _mn_step(vec: dict, r: int) -> dict:
    out: dict[Partition, Fraction] = {}
    for lam, c in vec.items():
        for mu, ht in rim_hook_additions(lam, r):
            v = out.get(mu, 0) + (c if ht % 2 == 0 else -c)
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
    return out


@lru_cache(maxsize=None)
def _jacobi_trudi(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """``s_lam = det(h_{lam_i - i + j})`` expanded into products of ``h``'s."""
    n = len(lam)
    acc: dict[Partition, int] = {}

    def rec(i, used, sign, factors):
        if i == n:
            key = Partition(sorted((f for f in factors if f), reverse=True))
            acc[key] = acc.get(key, 0) + sign
            return
        for j in range(n):
            if used >> j & 1:
                continue
            idx = lam[i] - i + j
            if idx < 0:
                continue
            # sign of the permutation: count inversions against later picks
            inv = bin(used >> j).count("1")
            rec(i + 1, used | 1 << j, -sign if inv % 2 else sign, factors + [idx])

    rec(0, 0, 1, [])
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def _mul_basis_schur(tag: Basis, mu: Partition, lam: Partition) -> dict:
    """``b_mu * s_lam`` as a Schur dictionary (shared cache; do not mutate)."""
    vec: dict = {lam: Fraction(1)}
    if tag is H:
        for r in mu:
            vec = _pieri_step(vec, _horizontal_strips, r)
    elif tag is E:
        for r in mu:
            vec = _pieri_step(vec, _vertical_strips, r)
    elif tag is P:
        for r in mu:
            vec = _mn_step(vec, r)
    else:
        # expand the narrower side of s_mu via (dual) Jacobi-Trudi
        conj = mu.conjugate()
        if len(conj) < len(mu):
            tag2, expansion = E, _jacobi_trudi(conj)
        else:
            tag2, expansion = H, _jacobi_trudi(mu)
        out: dict[Partition, Fraction] = {}
        for nu, c in expansion:
            for k, v in _mul_basis_schur(tag2, nu, lam).items():
                out[k] = out.get(k, 0) + c * v
        vec = out
    return {k: v for k, v in vec.items() if v}


# --- conversions -----------------------------------------------------------

def _basis_to_schur(tag: Basis, lam: Partition) -> dict:
    if tag is S:
        return {lam: Fraction(1)}
    return _mul_basis_schur(tag, lam, EMPTY)


def to_schur(x: SymElt) -> SymElt:
    if x.basis is S:
        return x
    acc: dict[Partition, Fraction] = {}
    for lam, c in x.items():
        for mu, v in _basis_to_schur(x.basis, lam).items():
            acc[mu] = acc.get(mu, 0) + c * v
    return SymElt(S, acc)


@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character ``chi^lam`` at cycle type ``mu``.

    Recursive Murnaghan-Nakayama: strip a rim hook of length ``mu[0]``.
    """
    if lam.size != mu.size:
        raise ValueError("character needs |lam| == |mu|")
    if not mu:
        return 1
    rest = Partition(mu[1:])
    return sum((-1) ** ht * character(nu, rest) for nu, ht in rim_hook_removals(lam, mu[0]))


@lru_cache(maxsize=None)
def _schur_to_basis(tag: Basis, lam: Partition) -> tuple:
    if tag is S:
        return ((lam, Fraction(1)),)
    if tag is H:
        return tuple((k, Fraction(v)) for k, v in _jacobi_trudi(lam))
    if tag is E:
        return tuple((k, Fraction(v)) for k, v in _jacobi_trudi(lam.conjugate()))
    out = []
    for mu in partitions_of(lam.size):
        chi = character(lam, mu)
        if chi:
            out.append((mu, Fraction(chi, z_value(mu))))
    return tuple(out)


def from_schur(x: SymElt, target) -> SymElt:
    """Rewrite a Schur-basis element in ``target``; inverse of :func:`to_schur`."""
    target = Basis.coerce(target)
    if x.basis is not S:
        raise ValueError("from_schur expects an element in the Schur basis")
    acc: dict[Partition, Fraction] = {}
    for lam, c in x.items():
        for mu, v in _schur_to_basis(target, lam):
            acc[mu] = acc.get(mu, 0) + c * v
    return SymElt(target, acc)


def convert(x: SymElt, target) -> SymElt:
    target = Basis.coerce(target)
    if x.basis is target:
        return x
    return from_schur(to_schur(x), target)


def same_element(a: SymElt, b: SymElt) -> bool:
    return to_schur(a) == to_schur(b)


# --- ring structure --------------------------------------------------------

def mul(a: SymElt, b: SymElt) -> SymElt:
    """Product in the Schur basis."""
    if len(b) and len(a) and a.basis is S and b.basis is not S:
        a, b = b, a
    right = to_schur(b)
    acc: dict[Partition, Fraction] = {}
    for mu, c in a.items():
        for lam, d in right.items():
            for nu, v in _mul_basis_schur(a.basis, mu, lam).items():
                acc[nu] = acc.get(nu, 0) + c * d * v
    return SymElt(S, acc)


def hall_inner(a: SymElt, b: SymElt) -> Fraction:
    """The pairing in which the Schur functions are orthonormal."""
    sb = to_schur(b).terms
    return sum((c * sb.get(lam, 0) for lam, c in to_schur(a).items()), Fraction(0))


@lru_cache(maxsize=None)
def _skew_basis_schur(tag: Basis, mu: Partition, lam: Partition) -> tuple:
    # <b_mu^* s_lam, s_nu> = <s_lam, b_mu s_nu>
    k = lam.size - mu.size
    out = []
    for nu in partitions_of(k):
        v = _mul_basis_schur(tag, mu, nu).get(lam)
        if v:
            out.append((nu, v))
    return tuple(out)


def skew(b: SymElt, x: SymElt) -> SymElt:
    """``b^* x``: the adjoint of multiplication by ``b``, in the Schur basis."""
    acc: dict[Partition, Fraction] = {}
    for lam, c in to_schur(x).items():
        for mu, d in b.items():
            if mu.size > lam.size:
                continue
            for nu, v in _skew_basis_schur(b.basis, mu, lam):
                acc[nu] = acc.get(nu, 0) + c * d * v
    return SymElt(S, acc)


def _twist_power(x: SymElt, p: int) -> SymElt:
    return SymElt(P, [(Partition(r * p for r in lam), c) for lam, c in x.items()])


def twist(x: SymElt, p: int) -> SymElt:
    """``x(x_1^p, x_2^p, ...)``, returned in the basis of ``x``.

    Done in the power basis, where it is ``p_r -> p_{p r}``.
    """
    if p < 2:
        raise ValueError(f"twist needs p >= 2, got {p}")
    return convert(_twist_power(convert(x, P), p), x.basis)


def twist_power(x: SymElt, p: int) -> SymElt:
    """Like :func:`twist` but always returns the power-sum expansion."""
    if p < 2:
        raise ValueError(f"twist needs p >= 2, got {p}")
    return _twist_power(convert(x, P), p)


# --- brute-force polynomial oracle ------------------------------------------

Poly = dict  # exponent tuple -> Fraction


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _poly_add(acc: Poly, b: Poly, c: Number = 1) -> None:
    for k, v in b.items():
        nv = acc.get(k, 0) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


@lru_cache(maxsize=None)
def _poly_e(r: int, n: int) -> tuple:
    out = []
    for subset in itertools.combinations(range(n), r):
        ex = [0] * n
        for i in subset:
            ex[i] = 1
        out.append((tuple(ex), Fraction(1)))
    return tuple(out)


@lru_cache(maxsize=None)
def _poly_h(r: int, n: int) -> tuple:
    out = []
    for ms in itertools.combinations_with_replacement(range(n), r):
        ex = [0] * n
        for i in ms:
            ex[i] += 1
        out.append((tuple(ex), Fraction(1)))
    return tuple(out)


@lru_cache(maxsize=None)
def _poly_p(r: int, n: int) -> tuple:
    out = []
    for i in range(n):
        ex = [0] * n
        ex[i] = r
        out.append((tuple(ex), Fraction(1)))
    return tuple(out)


def _ssyt(lam: Partition, n: int):
    """Semistandard tableaux of shape ``lam`` with entries in ``0..n-1``."""
    cells = list(lam.cells())
    filling: dict = {}

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = 0
        if c > 1:
            lo = max(lo, filling[(r, c - 1)])
        if r > 1:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def _poly_s(lam: Partition, n: int) -> tuple:
    acc: Poly = {}
    for t in _ssyt(lam, n):
        ex = [0] * n
        for v in t.values():
            ex[v] += 1
        key = tuple(ex)
        acc[key] = acc.get(key, 0) + 1
    return tuple((k, Fraction(v)) for k, v in acc.items())


_PRODUCT_RULES = {E: _poly_e, H: _poly_h, P: _poly_p}


def _basis_poly(tag: Basis, lam: Partition, n: int) -> Poly:
    if tag is S:
        return dict(_poly_s(lam, n))
    poly: Poly = {tuple([0] * n): Fraction(1)}
    for r in lam:
        poly = _poly_mul(poly, dict(_PRODUCT_RULES[tag](r, n)))
    return poly


def monomial_oracle(x: SymElt, nvars: int) -> dict[tuple[int, ...], Fraction]:
    """Expand ``x`` as an explicit polynomial in ``nvars`` variables.

    Schur functions come from semistandard tableaux; ``e``, ``h`` and ``p``
    from their defining monomial sums.  Returns ``{exponent vector: coeff}``
    sorted by exponent.  Two elements are equal iff their expansions agree
    with ``nvars`` at least both degrees.
    """
    if nvars < 1:
        raise ValueError("nvars must be positive")
    if x and x.degree > nvars:
        raise ValueError(f"nvars={nvars} is too small for degree {x.degree}")
    acc: Poly = {}
    for lam, c in x.items():
        _poly_add(acc, _basis_poly(x.basis, lam, nvars), c)
    return dict(sorted(acc.items()))


def poly_product(a: Mapping, b: Mapping) -> dict:
    """Product of two oracle expansions."""
    return dict(sorted(_poly_mul(dict(a), dict(b)).items()))
