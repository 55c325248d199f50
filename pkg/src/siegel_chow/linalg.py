"""Exact row reduction over Q on sparse rows.

Rows are dicts ``{column: Fraction}``.  Columns are integers; lower index
means higher priority as a pivot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Row = dict[int, Fraction]


def _axpy(dst: Row, a: Fraction, src: Mapping[int, Fraction]) -> None:
    for c, v in src.items():
        x = dst.get(c, 0) - a * v
        if x:
            dst[c] = x
        else:
            dst.pop(c, None)


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self, rows: Iterable[Mapping[int, object]] = ()):
        self.pivots: dict[int, Row] = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> Row:
        v: Row = {c: Fraction(x) for c, x in row.items() if x}
        # rows are fully reduced, so one pass over the pivots present suffices
        for p in sorted(c for c in v if c in self.pivots):
            a = v.get(p)
            if a:
                _axpy(v, a, self.pivots[p])
        return v

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert a row; returns True if it increased the rank."""
        v = self.reduce(row)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = {c: x * inv for c, x in v.items()}
        for q, r in self.pivots.items():
            a = r.get(p)
            if a:
                _axpy(r, a, v)
        self.pivots[p] = v
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)

    def rows(self) -> list[Row]:
        return [dict(self.pivots[p]) for p in sorted(self.pivots)]


def rank(rows: Iterable[Mapping[int, object]]) -> int:
    return Echelon(rows).rank


def same_span(a: Sequence[Mapping[int, object]], b: Sequence[Mapping[int, object]]) -> bool:
    ea, eb = Echelon(a), Echelon(b)
    return ea.rank == eb.rank and all(eb.contains(r) for r in ea.rows())


def nullspace(columns: Sequence[Mapping[int, object]], ncols: int | None = None) -> list[Row]:
    """Basis of {x : sum_j x_j * columns[j] = 0}, as sparse vectors over j."""
    n = len(columns) if ncols is None else ncols
    # reduce the augmented rows [column_j | unit_j]; offset tags the unit part
    offset = 1 + max((max(c) for c in columns if c), default=-1)
    ech = Echelon()
    kernel = []
    for j in range(n):
        aug = {c: Fraction(x) for c, x in columns[j].items() if x}
        aug[offset + j] = Fraction(1)
        red = ech.reduce(aug)
        if red and min(red) >= offset:
            kernel.append({c - offset: x for c, x in red.items()})
        ech.add(aug)
    return kernel


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly (Gauss-Jordan)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def dense_rank(matrix: Sequence[Sequence[object]]) -> int:
    return rank({j: x for j, x in enumerate(row) if x} for row in matrix)
