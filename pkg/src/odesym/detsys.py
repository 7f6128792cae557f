"""Determining equations for polynomial point symmetries.

A field X is a symmetry of ``F = 0`` when its prolongation applied to F
vanishes on the equation manifold.  That is tested as a zero
pseudo-remainder of ``pr X (F)`` modulo F in the top jet variable.  With a
polynomial ansatz of bounded degree the remainder is linear in the ansatz
unknowns, and its coefficients (as a polynomial in x, y, y1, y2) form a
homogeneous linear system whose kernel is the truncated symmetry algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .jet import PointField, apply, prolong
from .linalg import RatMatrix, nullspace
from .parse import OdeInput
from .poly import JET_VARS, Monomial, Poly, PolyError, prem, unknown

__all__ = [
    "Ansatz",
    "DeterminingSystem",
    "VerifyResult",
    "assemble_system",
    "divide_exact",
    "monomial_content",
    "plane_monomials",
    "solve_symmetries",
    "symmetry_defect",
    "verify",
]

DEFAULT_DEGREE = 4
_N_JET = len(JET_VARS)


def plane_monomials(d: int) -> List[Poly]:
    """Monomials x^i y^j with i + j <= d, by degree then descending power of x."""
    x, y = Poly.var("x"), Poly.var("y")
    return [x ** (n - j) * y ** j for n in range(d + 1) for j in range(n + 1)]


@dataclass(frozen=True)
class Ansatz:
    degree: int
    monomials: Tuple[Poly, ...] = field(repr=False)

    @classmethod
    def of_degree(cls, d: int) -> "Ansatz":
        if d < 0:
            raise ValueError("ansatz degree must be nonnegative")
        return cls(d, tuple(plane_monomials(d)))

    @property
    def size(self) -> int:
        return 2 * len(self.monomials)

    @property
    def xi_unknowns(self) -> List[int]:
        return list(range(len(self.monomials)))

    @property
    def eta_unknowns(self) -> List[int]:
        n = len(self.monomials)
        return list(range(n, 2 * n))

    def field(self) -> PointField:
        """Generic field with unknown coefficients c_0, c_1, ..."""
        n = len(self.monomials)
        xi = sum((unknown(i) * m for i, m in enumerate(self.monomials)), Poly())
        eta = sum((unknown(n + i) * m for i, m in enumerate(self.monomials)), Poly())
        return PointField(xi, eta)

    def instantiate(self, coeffs) -> PointField:
        n = len(self.monomials)
        xi = sum((m * c for m, c in zip(self.monomials, coeffs[:n])), Poly())
        eta = sum((m * c for m, c in zip(self.monomials, coeffs[n:])), Poly())
        return PointField(xi, eta)


@dataclass(frozen=True)
class DeterminingSystem:
    ansatz: Ansatz
    matrix: RatMatrix
    # jet monomial each row was collected from, for diagnostics
    row_keys: Tuple[Monomial, ...] = field(repr=False, default=())


@dataclass(frozen=True)
class VerifyResult:
    is_symmetry: bool
    cofactor: Poly
    power: int
    defect: Poly


def symmetry_defect(ode: OdeInput, f: PointField) -> Poly:
    return _defect(ode, f)[0]


def _defect(ode: OdeInput, f: PointField) -> Tuple[Poly, Poly, int]:
    g = apply(prolong(f, ode.order), ode.f)
    return prem(g, ode.f, ode.top)


def _leading(p: Poly):
    return p.sorted_terms()[0]


def divide_exact(p: Poly, d: Poly) -> Optional[Poly]:
    """``p / d`` if d divides p exactly, else None."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_d, lc_d = _leading(d)
    lm_exp = dict(lm_d)
    q = Poly()
    r = p
    while r:
        lm_r, lc_r = _leading(r)
        rest = dict(lm_r)
        for v, e in lm_exp.items():
            if rest.get(v, 0) < e:
                return None
            rest[v] -= e
        t = Poly({tuple(sorted((v, e) for v, e in rest.items() if e)): lc_r / lc_d})
        q = q + t
        r = r - t * d
    return q


def verify(ode: OdeInput, f: PointField) -> VerifyResult:
    """Check a concrete field; on success report ``lc^power * prX(F) == cofactor * F``.

    The prem multiplier is cancelled against the quotient where possible, so
    e.g. a field with ``prX(F) = 3y F`` reports cofactor ``3*y`` and power 0.
    """
    if any(v >= _N_JET for v in f.xi.variables() | f.eta.variables()):
        raise PolyError("verify needs a concrete field without ansatz unknowns")
    rem, quo, power = _defect(ode, f)
    if rem:
        return VerifyResult(False, Poly(), 0, rem)
    lc = ode.f.leading_coeff(ode.top)
    while power and quo:
        reduced = divide_exact(quo, lc)
        if reduced is None:
            break
        quo, power = reduced, power - 1
    if quo.is_zero():
        power = 0
    return VerifyResult(True, quo, power, rem)


def assemble_system(ode: OdeInput, d: int) -> DeterminingSystem:
    ansatz = Ansatz.of_degree(d)
    defect = symmetry_defect(ode, ansatz.field())
    groups = defect.collect(JET_VARS)
    keys = sorted(groups, key=_mono_key)
    rows = []
    for key in keys:
        form = groups[key]
        row = [Fraction(0)] * ansatz.size
        for mono, c in form.items():
            if len(mono) != 1 or mono[0][1] != 1:
                raise AssertionError("determining equations must be homogeneous linear")
            row[mono[0][0] - _N_JET] = c
        rows.append(row)
    return DeterminingSystem(ansatz, RatMatrix(rows, ansatz.size), tuple(keys))


def _mono_key(m: Monomial):
    dense = [0] * _N_JET
    for v, e in m:
        dense[v] = e
    return (-sum(dense), [-e for e in dense])


def solve_symmetries(ode: OdeInput, d: int = DEFAULT_DEGREE) -> List[PointField]:
    """Canonical basis of the polynomial symmetries of degree <= d."""
    system = assemble_system(ode, d)
    kernel = nullspace(system.matrix)
    return [system.ansatz.instantiate(v) for v in kernel]


def monomial_content(f: Poly) -> Poly:
    """Largest monomial dividing every term of ``f``."""
    common = None
    for mono, _ in f.items():
        exps = dict(mono)
        common = exps if common is None else {v: min(e, exps.get(v, 0)) for v, e in common.items()}
    if not common:
        return Poly.const(1)
    return Poly({tuple(sorted((v, e) for v, e in common.items() if e)): 1})
