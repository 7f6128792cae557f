"""Exact linear algebra over the rationals.

Elimination is fraction-free (Bareiss): each row is scaled to integers and
every intermediate entry is a minor of the input, so divisions are exact.
Only the final back-substitution into reduced echelon form uses Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

__all__ = [
    "RatMatrix",
    "echelon",
    "nullspace",
    "rank",
    "rref",
    "solve",
    "span_equal",
]

Vector = List[Fraction]


class RatMatrix:
    """Dense rectangular matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: Optional[int] = None):
        self.rows = [[Fraction(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("column count required for an empty matrix")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "RatMatrix":
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    def __matmul__(self, v: Sequence) -> Vector:
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows]

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        return self.rows[ij[0]][ij[1]]

    def __repr__(self):
        return f"RatMatrix({self.nrows}x{self.ncols})"


def _as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def _integer_rows(m: RatMatrix) -> List[List[int]]:
    out = []
    for row in m.rows:
        den = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * den) for v in row])
    return out


def echelon(m) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows (integers) and their pivot columns.
    Pivot choice: the entry of largest absolute value in the leftmost
    remaining column, earliest row on ties.
    """
    m = _as_matrix(m)
    a = _integer_rows(m)
    nrows, ncols = m.nrows, m.ncols
    r = 0
    prev = 1
    pivots: List[int] = []
    for col in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            v = a[i][col]
            if v and (best is None or abs(v) > abs(a[best][col])):
                best = i
        if best is None:
            continue
        a[r], a[best] = a[best], a[r]
        piv = a[r][col]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            lead = row[col]
            for j in range(col + 1, ncols):
                num = piv * row[j] - lead * prow[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row[j] = q
            row[col] = 0
        prev = piv
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rank(m) -> int:
    return len(echelon(m)[1])


def rref(m) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    m = _as_matrix(m)
    rows, pivots = echelon(m)
    red = [[Fraction(v) for v in row] for row in rows]
    for k in range(len(red) - 1, -1, -1):
        col = pivots[k]
        piv = red[k][col]
        red[k] = [v / piv for v in red[k]]
        for i in range(k):
            f = red[i][col]
            if f:
                red[i] = [a - f * b for a, b in zip(red[i], red[k])]
    return red, pivots


def nullspace(m) -> List[Vector]:
    """Canonical kernel basis: one vector per free column, that entry set to 1."""
    m = _as_matrix(m)
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(m, b: Sequence) -> Optional[Vector]:
    """A solution of ``m @ v == b``, free variables set to zero; None if inconsistent."""
    m = _as_matrix(m)
    if len(b) != m.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = RatMatrix([row + [Fraction(bi)] for row, bi in zip(m.rows, b)], m.ncols + 1)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    v = [Fraction(0)] * m.ncols
    for row, pc in zip(red, pivots):
        v[pc] = row[-1]
    return v


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    dims = {len(v) for v in a} | {len(v) for v in b}
    if len(dims) > 1:
        raise ValueError(f"vectors of different lengths: {sorted(dims)}")
    if not dims:
        return True
    n = dims.pop()
    ra = rank(RatMatrix(a, n)) if a else 0
    rb = rank(RatMatrix(b, n)) if b else 0
    return ra == rb == rank(RatMatrix(list(a) + list(b), n))
