"""Exact arithmetic for signed bigrassmannian polynomials, the q-weighted
determinant, tournaments and weighted condensation.

Every result can be computed by at least two independent routes and the
routes are compared for exact equality; see the ``verify`` CLI subcommand
and the test suite.
"""

from .errors import (
    BoundExceeded,
    DivisionByZero,
    InexactDivision,
    NegativeExponentAtZero,
    NotTransitive,
    ParseError,
    SizeMismatch,
    ZeroMinor,
)
from .exactpoly import (
    L,
    ONE,
    Q,
    ZERO,
    Monomial,
    Polynomial,
    RationalFunction,
    format_poly,
    lpow,
    parse,
    qpow,
    xvar,
)
from .permstat import Permutation
from .tournament import Tournament
from .bdet import PolyMatrix, DeformationFamily

__all__ = [
    "BoundExceeded",
    "DivisionByZero",
    "InexactDivision",
    "NegativeExponentAtZero",
    "NotTransitive",
    "ParseError",
    "SizeMismatch",
    "ZeroMinor",
    "L",
    "ONE",
    "Q",
    "ZERO",
    "Monomial",
    "Polynomial",
    "RationalFunction",
    "format_poly",
    "lpow",
    "parse",
    "qpow",
    "xvar",
    "Permutation",
    "Tournament",
    "PolyMatrix",
    "DeformationFamily",
]
