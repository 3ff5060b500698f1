"""Exact linear algebra over the rationals for the oracle checks.

Matrices are lists of rows of Fractions (or ints, coerced).  Only what the
commutant and rank computations need: row reduction, rank, nullspace, and an
incremental row-space builder so that huge stacked systems never materialize.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _rows(matrix: Iterable[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and its pivot columns."""
    rows = _rows(matrix)
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + rows[r:], pivots


def rank(matrix: Iterable[Sequence]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Iterable[Sequence]) -> list[list[Fraction]]:
    """Basis of the right nullspace (solutions of M x = 0)."""
    rows = _rows(matrix)
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis


class RowSpace:
    """Incremental row space: add rows one at a time, keep an rref basis."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, row: Sequence) -> list[Fraction]:
        vec = [Fraction(x) for x in row]
        for r, pc in enumerate(self.pivots):
            if vec[pc]:
                f = vec[pc]
                base = self.rows[r]
                vec = [a - f * b for a, b in zip(vec, base)]
        return vec

    def add(self, row: Sequence) -> bool:
        """Insert a row; returns True if it enlarged the space."""
        vec = self.reduce(row)
        pc = next((c for c, x in enumerate(vec) if x), None)
        if pc is None:
            return False
        inv = 1 / vec[pc]
        vec = [x * inv for x in vec]
        for r in range(len(self.rows)):
            if self.rows[r][pc]:
                f = self.rows[r][pc]
                self.rows[r] = [a - f * b for a, b in zip(self.rows[r], vec)]
        at = next((k for k, c in enumerate(self.pivots) if c > pc), len(self.pivots))
        self.rows.insert(at, vec)
        self.pivots.insert(at, pc)
        return True

    def contains(self, row: Sequence) -> bool:
        return all(not x for x in self.reduce(row))

    @property
    def dim(self) -> int:
        return len(self.rows)


class IntRowSpace:
    """Row space over the integers, fraction-free, for rank counting.

    Rows are cross-multiplied instead of divided, then stripped by their
    gcd, so entries stay integral and reasonably small.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @staticmethod
    def _strip(vec: list[int]) -> list[int]:
        g = 0
        for x in vec:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            vec = [x // g for x in vec]
        lead = next((x for x in vec if x), 0)
        return [-x for x in vec] if lead < 0 else vec

    def _eliminate(self, vec: list[int], pc: int, base: list[int]) -> list[int]:
        a, b = vec[pc], base[pc]
        g = gcd(a, b)
        am, bm = b // g, a // g
        return self._strip([am * x - bm * y for x, y in zip(vec, base)])

    def add(self, row: Sequence[int]) -> bool:
        vec = self._strip([int(x) for x in row])
        for r, pc in enumerate(self.pivots):
            if vec[pc]:
                vec = self._eliminate(vec, pc, self.rows[r])
        pc = next((c for c, x in enumerate(vec) if x), None)
        if pc is None:
            return False
        for r in range(len(self.rows)):
            if self.rows[r][pc]:
                self.rows[r] = self._eliminate(self.rows[r], pc, vec)
        at = next((k for k, c in enumerate(self.pivots) if c > pc), len(self.pivots))
        self.rows.insert(at, vec)
        self.pivots.insert(at, pc)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def int_rank(rows: Iterable[Sequence[int]]) -> int:
    rows = list(rows)
    if not rows:
        return 0
    space = IntRowSpace(len(rows[0]))
    for row in rows:
        space.add(row)
    return space.dim


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [
        [sum(Fraction(x) * Fraction(y) for x, y in zip(row, col)) for col in bt]
        for row in a
    ]


def spaces_equal(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence], ncols: int) -> bool:
    sa = RowSpace(ncols)
    for row in basis_a:
        sa.add(row)
    sb = RowSpace(ncols)
    for row in basis_b:
        sb.add(row)
    if sa.dim != sb.dim:
        return False
    return all(sa.contains(row) for row in sb.rows)
