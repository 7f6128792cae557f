"""Random generators and sympy conversions shared by the test modules."""

import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from odesym.jet import PointField
from odesym.poly import Poly, var_name

JET = ("x", "y", "y1", "y2")
SYMS = {name: sympy.Symbol(name) for name in JET}

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, variables=JET, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(
            (JET.index(v), e)
            for v in variables
            if (e := draw(st.integers(0, max_exp)))
        )
        terms[mono] = terms.get(mono, 0) + draw(small_fracs)
    return Poly(terms)


@st.composite
def point_fields(draw, max_terms=3, max_exp=3):
    xi = draw(polys(("x", "y"), max_terms, max_exp))
    eta = draw(polys(("x", "y"), max_terms, max_exp))
    return PointField(xi, eta)


def random_poly(rng: random.Random, variables=JET, max_terms=4, max_deg=3) -> Poly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * len(variables)
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(len(variables))] += 1
        mono = tuple(sorted((JET.index(v), e) for v, e in zip(variables, exps) if e))
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        terms[mono] = terms.get(mono, 0) + c
    return Poly(terms)


def random_field(rng: random.Random, max_deg=3) -> PointField:
    return PointField(random_poly(rng, ("x", "y"), 3, max_deg), random_poly(rng, ("x", "y"), 3, max_deg))


def to_sympy(p: Poly):
    expr = sympy.Integer(0)
    for mono, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            term *= sympy.Symbol(var_name(v)) ** e
        expr += term
    return sympy.expand(expr)


def from_sympy(expr) -> Poly:
    expr = sympy.expand(expr)
    if expr == 0:
        return Poly()
    gens = sorted(expr.free_symbols, key=lambda s: JET.index(s.name))
    if not gens:
        return Poly.const(Fraction(str(expr)))
    out = {}
    for exps, c in sympy.Poly(expr, *gens).terms():
        mono = tuple(sorted((JET.index(g.name), e) for g, e in zip(gens, exps) if e))
        out[mono] = Fraction(int(c.p), int(c.q))
    return Poly(out)
