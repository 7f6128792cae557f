import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import polys
from odesym.audit import shipped_corpus_path
from odesym.parse import (
    ConstantError,
    OrderError,
    ParseError,
    VariableError,
    parse_expr,
    parse_field,
    parse_ode,
    print_canonical,
)
from odesym.poly import Poly

X, Y, Y1, Y2 = (Poly.var(v) for v in ("x", "y", "y1", "y2"))


@pytest.mark.parametrize(
    "text, f, order",
    [
        ("y*y'' = 2*(y')^2", Y * Y2 - 2 * Y1**2, 2),
        ("y'' = 0", Y2, 2),
        ("y = (y')^3", Y - Y1**3, 1),
        ("y*y2 = 2*y1^2", Y * Y2 - 2 * Y1**2, 2),
        ("y″ + y′ = x", Y2 + Y1 - X, 2),
    ],
)
def test_parse_ode(text, f, order):
    ode = parse_ode(text)
    assert ode.f == f
    assert ode.order == order


def test_rational_literals():
    p = parse_expr("3/2*y1 - 1/3")
    assert p == Y1 * Fraction(3, 2) - Fraction(1, 3)
    assert print_canonical(p) == "3/2*y1 - 1/3"


def test_unary_minus_binds_looser_than_power():
    assert parse_expr("-x^2") == -(X**2)
    assert parse_expr("(-x)^2") == X**2
    assert parse_expr("2*-y") == -2 * Y


@pytest.mark.parametrize(
    "text, xi, eta",
    [
        ("x^2, -x*y", X**2, -X * Y),
        ("0, y", Poly(), Y),
        ("1, 0", Poly.const(1), Poly()),
    ],
)
def test_parse_field(text, xi, eta):
    f = parse_field(text)
    assert (f.xi, f.eta) == (xi, eta)


def test_field_rejects_jet_variables():
    with pytest.raises(VariableError):
        parse_field("y1, 0")


@pytest.mark.parametrize("text", ["2x", "x y", "x**2", "x^-1", "(x", "x = = y", "1/0*x", "", "xy", "y'''"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_ode(text)


def test_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_ode("y*y'' = 2*")
    assert exc.value.pos == 10
    assert "position 10" in str(exc.value)


def test_order_and_constant_errors():
    with pytest.raises(OrderError):
        parse_ode("x + y = 3")
    with pytest.raises(ConstantError):
        parse_ode("2 = 2")
    with pytest.raises(ConstantError):
        parse_ode("y' = y'")


@pytest.mark.parametrize(
    "p, text",
    [(Y * Y2 - 2 * Y1**2, "y*y2 - 2*y1^2"), (Poly(), "0"), (X, "x"), (-X * Y * Fraction(1, 3) + 1, "-1/3*x*y + 1")],
)
def test_print_canonical(p, text):
    assert print_canonical(p) == text


@settings(max_examples=200, deadline=None)
@given(polys(max_terms=5, max_exp=4))
def test_round_trip_random(p):
    assert parse_expr(print_canonical(p)) == p


@settings(max_examples=200, deadline=None)
@given(polys(), polys())
def test_printing_injective(p, q):
    assert (print_canonical(p) == print_canonical(q)) == (p == q)


def test_round_trip_corpus():
    with open(shipped_corpus_path()) as fh:
        entries = [json.loads(line) for line in fh if line.strip()]
    assert entries
    for e in entries:
        f = parse_ode(e["ode"]).f
        assert parse_ode(print_canonical(f)).f == f
        for s in e.get("expected_basis", []):
            fld = parse_field(s)
            assert parse_field(f"{print_canonical(fld.xi)}, {print_canonical(fld.eta)}") == fld
