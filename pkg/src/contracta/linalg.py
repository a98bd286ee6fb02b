"""Exact row reduction over QQ on sparse rows (``dict[int, Fraction]``)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

Row = dict[int, Fraction]


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace."""

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        row = {k: v for k, v in row.items() if v}
        for col in sorted(set(row) & set(self.pivots)):
            c = row.get(col)
            if not c:
                continue
            for k, v in self.pivots[col].items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: Row) -> bool:
        """Insert ``row``; return False when it was already in the span."""
        row = self.reduce(row)
        if not row:
            return False
        # pivot on the smallest column still present; keep earlier pivots reduced
        col = min(row)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        for other in self.pivots.values():
            c = other.get(col)
            if c:
                for k, v in row.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.pivots[col] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Row]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[Row], ncols: int) -> list[Row]:
    """Basis of ``{v : r . v = 0 for every row r}``."""
    e = Echelon()
    for r in rows:
        e.add(r)
    free = [j for j in range(ncols) if j not in e.pivots]
    basis = []
    for j in free:
        v: Row = {j: Fraction(1)}
        for col, row in e.pivots.items():
            c = row.get(j)
            if c:
                v[col] = -c
        basis.append(v)
    return basis
