"""Exact sparse Gaussian elimination over the rationals.

Vectors are dictionaries ``{key: Fraction}`` with hashable, orderable keys.
The pivot of a row is its largest key.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping


def _axpy(x: dict, a: Fraction, y: Mapping) -> None:
    """``x += a * y`` in place, dropping zeros."""
    for k, v in y.items():
        nv = x.get(k, 0) + a * v
        if nv:
            x[k] = nv
        else:
            x.pop(k, None)


class Echelon:
    """Incrementally built row-echelon basis of a subspace."""

    def __init__(self):
        self._rows: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of ``vec`` after elimination against the stored rows."""
        r = {k: Fraction(v) for k, v in vec.items() if v}
        while r:
            pivots = [k for k in r if k in self._rows]
            if not pivots:
                break
            k = max(pivots)
            _axpy(r, -r[k], self._rows[k])
        return r

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; returns False when it was already in the span."""
        r = self.reduce(vec)
        if not r:
            return False
        piv = max(r)
        scale = 1 / r[piv]
        r = {k: v * scale for k, v in r.items()}
        # keep the stored rows fully reduced against each other
        for row in self._rows.values():
            if piv in row:
                _axpy(row, -row[piv], r)
        self._rows[piv] = r
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def rows(self) -> list[dict]:
        """Basis rows sorted by pivot, largest first."""
        return [dict(self._rows[k]) for k in sorted(self._rows, reverse=True)]
