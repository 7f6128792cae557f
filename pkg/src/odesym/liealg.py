"""Brackets, structure constants and Killing-form data for plane vector fields."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .jet import PointField
from .linalg import RatMatrix, rank, rref, solve
from .poly import Monomial

__all__ = [
    "AlgebraReport",
    "IndependenceError",
    "StructureConstants",
    "bracket",
    "closure",
    "derived_series",
    "field_vectors",
    "killing_matrix",
    "killing_rank",
]


class IndependenceError(ValueError):
    pass


def bracket(a: PointField, b: PointField) -> PointField:
    return PointField(a(b.xi) - b(a.xi), a(b.eta) - b(a.eta))


def field_vectors(fields: Sequence[PointField]) -> Tuple[List[List[Fraction]], List[Tuple[int, Monomial]]]:
    """Coordinates of ``fields`` in a shared monomial basis.

    Keys are ``(component, monomial)`` with component 0 for xi, 1 for eta.
    """
    keys = sorted({(0, m) for f in fields for m in f.xi.terms} | {(1, m) for f in fields for m in f.eta.terms})
    index = {k: i for i, k in enumerate(keys)}
    vecs = []
    for f in fields:
        v = [Fraction(0)] * len(keys)
        for comp, poly in ((0, f.xi), (1, f.eta)):
            for m, c in poly.items():
                v[index[(comp, m)]] = c
        vecs.append(v)
    return vecs, keys


@dataclass(frozen=True)
class StructureConstants:
    """``[X_i, X_j] = sum_k c[i][j][k] X_k``."""

    c: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.c)

    def bracket_coords(self, u: Sequence, v: Sequence) -> List[Fraction]:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                w = u[i] * v[j]
                if w:
                    row = self.c[i][j]
                    for k in range(n):
                        if row[k]:
                            out[k] += w * row[k]
        return out

    def is_antisymmetric(self) -> bool:
        n = self.dim
        return all(self.c[i][j][k] == -self.c[j][i][k] for i in range(n) for j in range(n) for k in range(n))

    def satisfies_jacobi(self) -> bool:
        n = self.dim
        e = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = [Fraction(0)] * n
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_coords(e[b], e[c])
                        t = self.bracket_coords(e[a], inner)
                        total = [s + x for s, x in zip(total, t)]
                    if any(total):
                        return False
        return True


def killing_matrix(sc: StructureConstants) -> List[List[Fraction]]:
    n = sc.dim
    c = sc.c
    return [
        [sum((c[i][l][k] * c[j][k][l] for k in range(n) for l in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def killing_rank(sc: StructureConstants) -> int:
    if sc.dim == 0:
        return 0
    return rank(RatMatrix(killing_matrix(sc), sc.dim))


def derived_series(sc: StructureConstants) -> List[int]:
    """Dimensions of g, [g, g], ... until the series stabilizes or hits zero."""
    n = sc.dim
    dims = [n]
    span = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(n):
        if not span:
            break
        products = [sc.bracket_coords(u, v) for a, u in enumerate(span) for v in span[a + 1:]]
        span = rref(RatMatrix(products, n))[0] if products else []
        dims.append(len(span))
        if dims[-1] == dims[-2] or dims[-1] == 0:
            break
    return dims


@dataclass(frozen=True)
class AlgebraReport:
    dimension: int
    closed: bool
    structure: Optional[StructureConstants] = None
    killing_rank: Optional[int] = None
    derived_dims: List[int] = field(default_factory=list)
    # index pairs whose bracket leaves the span
    open_pairs: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def looks_like_sl3(self) -> bool:
        return (
            self.closed
            and self.dimension == 8
            and self.killing_rank == 8
            and self.derived_dims[:2] == [8, 8]
        )


def closure(basis: Sequence[PointField]) -> AlgebraReport:
    n = len(basis)
    brackets: Dict[Tuple[int, int], PointField] = {
        (i, j): bracket(basis[i], basis[j]) for i in range(n) for j in range(i + 1, n)
    }
    order = list(brackets)
    vecs, keys = field_vectors(list(basis) + [brackets[p] for p in order])
    base_vecs = vecs[:n]
    if n and rank(RatMatrix(base_vecs, len(keys))) < n:
        raise IndependenceError("basis fields are linearly dependent")
    if n == 0:
        return AlgebraReport(0, True, StructureConstants(()), 0, [0])

    a = RatMatrix.from_columns(base_vecs, len(keys))
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    open_pairs = []
    for p, v in zip(order, vecs[n:]):
        coords = solve(a, v)
        if coords is None:
            open_pairs.append(p)
            continue
        i, j = p
        c[i][j] = coords
        c[j][i] = [-x for x in coords]
    if open_pairs:
        return AlgebraReport(n, False, open_pairs=open_pairs)
    sc = StructureConstants(tuple(tuple(tuple(row) for row in plane) for plane in c))
    return AlgebraReport(n, True, sc, killing_rank(sc), derived_series(sc))
