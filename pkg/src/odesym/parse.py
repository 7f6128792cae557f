"""Reading ODEs and point fields from text, and printing polynomials back.

Accepted syntax (``*`` is mandatory, no implicit multiplication)::

    equation := expr "=" expr | expr
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" nonneg-int)?
    base     := "x" | "y" | "y1" | "y2" | "y'" | "y''" | rational
              | "(" expr ")" | "-" factor
    rational := int ("/" posint)?

``y'``/``y''`` (also the typographic primes) are read as ``y1``/``y2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Optional

from .jet import PointField
from .poly import JET_VARS, Poly, var_index

__all__ = [
    "ConstantError",
    "DegenerateError",
    "OdeInput",
    "OrderError",
    "ParseError",
    "VariableError",
    "format_field",
    "parse_expr",
    "parse_field",
    "parse_ode",
    "print_canonical",
]


class ParseError(ValueError):
    def __init__(self, message: str, pos: Optional[int] = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class VariableError(ParseError):
    pass


class DegenerateError(ValueError):
    """The equation is not a genuine first or second order ODE."""


class OrderError(DegenerateError):
    pass


class ConstantError(DegenerateError):
    pass


class _Tok(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:''|'|″|′′|′)?)
  | (?P<op>[-+*^/()=,])
    """,
    re.VERBOSE,
)

_PRIMES = {"y'": "y1", "y′": "y1", "y''": "y2", "y″": "y2", "y′′": "y2"}


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, allowed: FrozenSet[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.allowed = allowed

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.cur
        return tok.kind == "op" and tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.take()

    def fail(self, what: str):
        tok = self.cur
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"{what}, found {found}", tok.pos)

    def expr(self) -> Poly:
        acc = self.term()
        while self.at("+") or self.at("-"):
            op = self.take().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.at("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.base()
        if self.at("^"):
            self.take()
            tok = self.cur
            if tok.kind != "num":
                self.fail("expected a nonnegative integer exponent")
            self.take()
            base = base ** int(tok.text)
        return base

    def base(self) -> Poly:
        tok = self.cur
        if tok.kind == "num":
            self.take()
            value = Fraction(int(tok.text))
            if self.at("/"):
                self.take()
                den = self.cur
                if den.kind != "num" or int(den.text) == 0:
                    self.fail("expected a positive integer denominator")
                self.take()
                value /= int(den.text)
            return Poly.const(value)
        if tok.kind == "name":
            self.take()
            name = _PRIMES.get(tok.text, tok.text)
            try:
                idx = var_index(name)
            except ValueError:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.pos) from None
            if name not in self.allowed and not (
                "c_*" in self.allowed and name.startswith("c_")
            ):
                raise VariableError(f"variable {tok.text!r} not allowed here", tok.pos)
            return Poly.var(idx)
        if self.at("("):
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        if self.at("-"):
            self.take()
            return -self.factor()
        self.fail("expected a number, variable or '('")


def parse_expr(text: str, allowed=JET_VARS) -> Poly:
    """Parse a single polynomial expression.

    ``allowed`` restricts the variable names; include ``"c_*"`` to admit
    ansatz unknowns.
    """
    p = _Parser(text, frozenset(allowed))
    result = p.expr()
    if p.cur.kind != "end":
        p.fail("unexpected trailing input")
    return result


@dataclass(frozen=True)
class OdeInput:
    """Implicit ODE ``f(x, y, y1[, y2]) = 0``."""

    f: Poly
    order: int

    @property
    def top(self) -> str:
        """Highest jet variable, the one reductions are performed in."""
        return "y2" if self.order == 2 else "y1"

    @classmethod
    def from_poly(cls, f: Poly) -> "OdeInput":
        if f.is_constant():
            raise ConstantError("equation has no variables")
        if f.contains("y2"):
            return cls(f, 2)
        if f.contains("y1"):
            return cls(f, 1)
        raise OrderError("equation contains neither y' nor y''")

    def __str__(self):
        return f"{print_canonical(self.f)} = 0"


def parse_ode(text: str) -> OdeInput:
    p = _Parser(text, frozenset(JET_VARS))
    lhs = p.expr()
    if p.at("="):
        p.take()
        lhs = lhs - p.expr()
    if p.cur.kind != "end":
        p.fail("unexpected trailing input")
    return OdeInput.from_poly(lhs)


def parse_field(text: str) -> PointField:
    """Parse ``"xi, eta"`` into a point field on the (x, y) plane."""
    p = _Parser(text, frozenset(("x", "y")))
    xi = p.expr()
    p.expect(",")
    eta = p.expr()
    if p.cur.kind != "end":
        p.fail("unexpected trailing input")
    return PointField(xi, eta)


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_canonical(p: Poly) -> str:
    if p.is_zero():
        return "0"
    from .poly import var_name

    parts = []
    for mono, c in p.sorted_terms():
        body = "*".join(
            var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in mono
        )
        if not body:
            s = _fmt_rat(c)
        elif c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = f"{_fmt_rat(c)}*{body}"
        if parts:
            parts.append(f"- {s[1:]}" if s.startswith("-") else f"+ {s}")
        else:
            parts.append(s)
    return " ".join(parts)


def format_field(f: PointField) -> str:
    return f"{print_canonical(f.xi)}, {print_canonical(f.eta)}"
