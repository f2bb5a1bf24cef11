"""Young diagram combinatorics.

Partitions are stored as tuples of weakly decreasing positive integers and
drawn in English notation: row ``k`` (1-based) has ``parts[k-1]`` boxes and the
box in row ``k``, column ``l`` has content ``l - k``.

Residues are taken modulo ``p``.  ``p = 0`` means no reduction at all, so the
residues are plain integers (the ``sl_infinity`` case).  ``p = 1`` is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([4, 4, 2, 1]).size
    11
    >>> Partition([])
    Partition([])
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive integers: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {list(parts)}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for x in self if x > c) for c in range(self[0]))

    def cells(self) -> Iterator[Cell]:
        for k, row in enumerate(self, start=1):
            for l in range(1, row + 1):
                yield Cell(k, l)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out


EMPTY = Partition()


class Cell(NamedTuple):
    row: int
    col: int


class RimHookRemoval(NamedTuple):
    result: Partition
    height: int


_PARTITION_RE = re.compile(r"^\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``[4,4,2,1]`` (or ``[]``) into a Partition."""
    m = _PARTITION_RE.match(text)
    if not m:
        raise ValueError(f"not a partition literal: {text!r}")
    body = m.group(1).strip()
    if not body:
        return EMPTY
    return Partition(int(x) for x in body.split(","))


def format_partition(lam: Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def _check_p(p: int) -> None:
    if p < 0 or p == 1:
        raise ValueError(f"p must be 0 or at least 2, got {p}")


def content(c: Cell) -> int:
    return c.col - c.row


def residue(c: Cell, p: int) -> int:
    _check_p(p)
    return reduce_index(content(c), p)


def reduce_index(i: int, p: int) -> int:
    return i % p if p else i


# --- adding and removing single boxes -------------------------------------

def addable_cells(lam: Partition) -> list[Cell]:
    """Outer corners of the diagram, top to bottom."""
    out = []
    for k in range(len(lam) + 1):
        row = lam[k] if k < len(lam) else 0
        if k == 0 or lam[k - 1] > row:
            out.append(Cell(k + 1, row + 1))
    return out


def removable_cells(lam: Partition) -> list[Cell]:
    """Inner corners of the diagram, top to bottom."""
    return [Cell(k + 1, lam[k]) for k in range(len(lam))
            if k + 1 == len(lam) or lam[k + 1] < lam[k]]


def _add_cell(lam: Partition, c: Cell) -> Partition:
    parts = list(lam)
    if c.row > len(parts):
        parts.append(1)
    else:
        parts[c.row - 1] += 1
    return Partition(parts)


def _remove_cell(lam: Partition, c: Cell) -> Partition:
    parts = list(lam)
    parts[c.row - 1] -= 1
    return Partition(parts)


def _sorted_desc(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(parts, reverse=True)


def addable_i_boxes(lam: Partition, i: int, p: int) -> list[Partition]:
    """Partitions obtained from ``lam`` by adding one box of residue ``i``."""
    _check_p(p)
    i = reduce_index(i, p)
    return _sorted_desc(_add_cell(lam, c) for c in addable_cells(lam)
                        if reduce_index(content(c), p) == i)


def removable_i_boxes(lam: Partition, i: int, p: int) -> list[Partition]:
    """Partitions obtained from ``lam`` by removing one box of residue ``i``."""
    _check_p(p)
    i = reduce_index(i, p)
    return _sorted_desc(_remove_cell(lam, c) for c in removable_cells(lam)
                        if reduce_index(content(c), p) == i)


# --- residue counts / weight labels ---------------------------------------

@dataclass(frozen=True)
class WeightLabel:
    """Residue-count vector of a partition; equal labels mean the same block.

    ``counts`` holds only the nonzero entries, as sorted ``(residue, count)``
    pairs, so that equal labels compare and hash equal.
    """

    p: int
    counts: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, p: int, counts: dict[int, int]) -> WeightLabel:
        if any(v < 0 for v in counts.values()):
            raise ValueError("residue counts must be nonnegative")
        if p and any(not 0 <= k < p for k in counts):
            raise ValueError(f"residues must lie in 0..{p - 1}")
        return cls(p, tuple(sorted((k, v) for k, v in counts.items() if v)))

    def __getitem__(self, i: int) -> int:
        return dict(self.counts).get(reduce_index(i, self.p), 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def vector(self) -> tuple[int, ...]:
        """Dense ``(m_0, ..., m_{p-1})``; only meaningful for ``p >= 2``."""
        if not self.p:
            raise ValueError("dense vector needs p >= 2")
        return tuple(self[i] for i in range(self.p))

    def shift(self, i: int, by: int = 1) -> WeightLabel:
        d = self.as_dict()
        i = reduce_index(i, self.p)
        d[i] = d.get(i, 0) + by
        return WeightLabel.from_mapping(self.p, d)

    @property
    def size(self) -> int:
        return sum(v for _, v in self.counts)


def residue_counts(lam: Partition, p: int) -> WeightLabel:
    _check_p(p)
    counts: dict[int, int] = {}
    for c in lam.cells():
        r = reduce_index(content(c), p)
        counts[r] = counts.get(r, 0) + 1
    return WeightLabel.from_mapping(p, counts)


# --- rim hooks -------------------------------------------------------------

def hook_length(lam: Partition, c: Cell) -> int:
    arm = lam[c.row - 1] - c.col
    leg = lam.conjugate()[c.col - 1] - c.row
    return arm + leg + 1


def rim_hook_removals(lam: Partition, r: int) -> list[RimHookRemoval]:
    """All ways to strip a border strip of ``r`` cells from ``lam``.

    Each cell ``(i, j)`` of hook length ``r`` determines one strip: walk the
    rim from the end of row ``i`` down to the bottom of column ``j``.  Rows
    ``i..i+leg-1`` drop to the next row's length minus one, and row
    ``i+leg`` is cut back to ``j - 1``.
    """
    if r < 1:
        raise ValueError("rim hook length must be positive")
    conj = lam.conjugate()
    out = []
    for c in lam.cells():
        i, j = c
        leg = conj[j - 1] - i
        if lam[i - 1] - j + leg + 1 != r:
            continue
        parts = list(lam)
        for k in range(i - 1, i - 1 + leg):
            parts[k] = lam[k + 1] - 1
        parts[i - 1 + leg] = j - 1
        out.append(RimHookRemoval(Partition(parts), leg))
    out.sort(key=lambda rh: rh.result, reverse=True)
    return out


def beta_set(lam: Partition, n: int) -> list[int]:
    """Bead positions ``parts[k] + n - k`` (k = 1..n) for ``n >= len(lam)``."""
    if n < len(lam):
        raise ValueError("abacus needs at least len(lam) beads")
    padded = list(lam) + [0] * (n - len(lam))
    return [padded[k] + n - 1 - k for k in range(n)]


def from_beta_set(beads: Iterable[int]) -> Partition:
    b = sorted(beads, reverse=True)
    n = len(b)
    return Partition(b[k] - (n - 1 - k) for k in range(n))


def rim_hook_additions(lam: Partition, r: int) -> list[RimHookRemoval]:
    """All ``mu`` such that ``mu / lam`` is a border strip of ``r`` cells.

    Computed on the abacus: sliding a bead up ``r`` positions into an empty
    slot adds a strip whose height is the number of beads jumped over.
    """
    if r < 1:
        raise ValueError("rim hook length must be positive")
    beads = beta_set(lam, len(lam) + r)
    occupied = set(beads)
    out = []
    for x in beads:
        if x + r in occupied:
            continue
        height = sum(1 for y in beads if x < y < x + r)
        new = occupied - {x} | {x + r}
        out.append(RimHookRemoval(from_beta_set(new), height))
    out.sort(key=lambda rh: rh.result, reverse=True)
    return out


def p_core_and_quotient(lam: Partition, p: int) -> tuple[Partition, tuple[Partition, ...]]:
    """The ``p``-core and ``p``-quotient of ``lam``, read off the abacus.

    The number of beads is the least multiple of ``p`` that is at least
    ``len(lam)``; quotient component ``j`` is the partition carried by
    runner ``j`` (positions congruent to ``j`` mod ``p``).
    """
    if p < 2:
        raise ValueError("p-cores need p >= 2")
    n = -(-len(lam) // p) * p
    beads = beta_set(lam, n)
    runners: list[list[int]] = [[] for _ in range(p)]
    for x in beads:
        runners[x % p].append(x // p)
    core_beads = []
    quotient = []
    for j, levels in enumerate(runners):
        core_beads.extend(j + p * y for y in range(len(levels)))
        quotient.append(from_beta_set(levels))
    return from_beta_set(core_beads), tuple(quotient)


def p_core(lam: Partition, p: int) -> Partition:
    return p_core_and_quotient(lam, p)[0]


def p_core_by_removal(lam: Partition, p: int) -> Partition:
    """Strip ``p``-rim hooks greedily (first available) until none remain."""
    if p < 2:
        raise ValueError("p-cores need p >= 2")
    while True:
        hooks = rim_hook_removals(lam, p)
        if not hooks:
            return lam
        lam = hooks[0].result


# --- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        return ()
    return _partitions_bounded(n, n)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def z_value(lam: Partition) -> int:
    """``prod_i i**m_i * m_i!`` over the part multiplicities ``m_i``."""
    z = 1
    for part, mult in lam.multiplicities().items():
        z *= part ** mult * factorial(mult)
    return z
