"""Dense exact row reduction over any field whose elements support + - * /."""
from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are searched only in the first ``ncols`` columns (default: all),
    which lets callers reduce an augmented matrix.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    width = len(mat[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(mat)) if mat[k][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv if x else x for x in mat[r]]
        prow = mat[r]
        for k in range(len(mat)):
            if k != r:
                f = mat[k][col]
                if f:
                    row = mat[k]
                    mat[k] = [a - f * b if b else a for a, b in zip(row, prow)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


class EchelonBasis:
    """Incrementally maintained reduced basis of a subspace of K^width."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert vec; returns False if it was already in the span."""
        v = self.reduce(vec)
        p = next((k for k, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv if x else x for x in v]
        for k, row in enumerate(self.rows):
            f = row[p]
            if f:
                self.rows[k] = [a - f * b if b else a for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def coordinates(self, vec: Sequence) -> list:
        """Coordinates of a vector in the span, one per stored row."""
        return [vec[p] for p in self.pivots]
