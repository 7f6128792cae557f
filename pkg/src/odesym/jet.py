"""Point vector fields on the (x, y) plane and their prolongation to 2-jets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .poly import Poly, PolyError, Scalar

__all__ = [
    "PointField",
    "ProlongedField",
    "apply",
    "prolong",
    "total_derivative",
]

_X, _Y, _Y1, _Y2 = (Poly.var(v) for v in ("x", "y", "y1", "y2"))


@dataclass(frozen=True)
class PointField:
    """``xi(x, y) d/dx + eta(x, y) d/dy``.

    Components may carry ansatz unknowns but never jet variables.
    """

    xi: Poly
    eta: Poly

    def __post_init__(self):
        for comp in (self.xi, self.eta):
            if comp.contains("y1") or comp.contains("y2"):
                raise PolyError("point field components must not depend on y1 or y2")

    @classmethod
    def zero(cls) -> "PointField":
        return cls(Poly(), Poly())

    def is_zero(self) -> bool:
        return self.xi.is_zero() and self.eta.is_zero()

    def __add__(self, other: "PointField") -> "PointField":
        return PointField(self.xi + other.xi, self.eta + other.eta)

    def __sub__(self, other: "PointField") -> "PointField":
        return PointField(self.xi - other.xi, self.eta - other.eta)

    def __neg__(self) -> "PointField":
        return PointField(-self.xi, -self.eta)

    def __mul__(self, c: Scalar) -> "PointField":
        return PointField(self.xi * c, self.eta * c)

    __rmul__ = __mul__

    def __call__(self, g: Poly) -> Poly:
        """Directional derivative of ``g`` along the field."""
        return self.xi * g.diff("x") + self.eta * g.diff("y")

    def __str__(self):
        from .parse import format_field

        return format_field(self)


@dataclass(frozen=True)
class ProlongedField:
    base: PointField
    eta1: Poly
    eta2: Optional[Poly] = None

    @property
    def order(self) -> int:
        return 1 if self.eta2 is None else 2

    def components(self) -> Tuple[Poly, ...]:
        comps = (self.base.xi, self.base.eta, self.eta1)
        return comps if self.eta2 is None else comps + (self.eta2,)

    def __call__(self, g: Poly) -> Poly:
        return apply(self, g)


def total_derivative(p: Poly) -> Poly:
    """``D_x p = p_x + y1 p_y + y2 p_y1`` for ``p`` free of ``y2``."""
    if p.contains("y2"):
        raise PolyError("total_derivative is truncated at second order; input contains y2")
    return p.diff("x") + _Y1 * p.diff("y") + _Y2 * p.diff("y1")


def prolong(f: PointField, order: int = 2) -> ProlongedField:
    if order not in (1, 2):
        raise ValueError("prolongation order must be 1 or 2")
    dxi = total_derivative(f.xi)
    eta1 = total_derivative(f.eta) - _Y1 * dxi
    if order == 1:
        return ProlongedField(f, eta1)
    eta2 = total_derivative(eta1) - _Y2 * dxi
    return ProlongedField(f, eta1, eta2)


def apply(pf: ProlongedField, f: Poly) -> Poly:
    out = pf.base.xi * f.diff("x") + pf.base.eta * f.diff("y") + pf.eta1 * f.diff("y1")
    fy2 = f.diff("y2")
    if fy2:
        if pf.eta2 is None:
            raise PolyError("first-order prolongation applied to a function of y2")
        out = out + pf.eta2 * fy2
    return out
