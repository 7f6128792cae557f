"""Lie point symmetries of implicit polynomial ODEs F(x, y, y', y'') = 0."""

from .detsys import Ansatz, VerifyResult, assemble_system, solve_symmetries, symmetry_defect, verify
from .jet import PointField, ProlongedField, apply, prolong, total_derivative
from .liealg import AlgebraReport, StructureConstants, bracket, closure, killing_rank
from .linalg import RatMatrix, nullspace, rank, span_equal
from .parse import OdeInput, format_field, parse_field, parse_ode, print_canonical
from .poly import Poly, prem

__version__ = "0.1.0"

__all__ = [
    "AlgebraReport",
    "Ansatz",
    "OdeInput",
    "PointField",
    "Poly",
    "ProlongedField",
    "RatMatrix",
    "StructureConstants",
    "VerifyResult",
    "apply",
    "assemble_system",
    "bracket",
    "closure",
    "format_field",
    "killing_rank",
    "nullspace",
    "parse_field",
    "parse_ode",
    "prem",
    "print_canonical",
    "prolong",
    "rank",
    "solve_symmetries",
    "span_equal",
    "symmetry_defect",
    "total_derivative",
    "verify",
]
