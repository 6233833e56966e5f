"""Exact Gaussian-rational arithmetic, rational functions and linear algebra."""

from .gaussian import GaussianRational, format_gaussian
from .symbols import CHART_INVOLUTION, Chart, Involution, parse_symbol, symbol_key, symbol_name
from .poly import Poly
from .scalar import I, ONE, ZERO, Scalar, format_scalar, scalar, symbol
from .linalg import NO_SOLUTION, Eliminator, Solution, kernel, rank, solve_linear
from .grammar import parse_scalar, serialize_scalar

__all__ = [
    "CHART_INVOLUTION", "Chart", "Eliminator", "GaussianRational", "I", "Involution",
    "NO_SOLUTION", "ONE", "Poly", "Scalar", "Solution", "ZERO", "format_gaussian",
    "format_scalar", "kernel", "parse_scalar", "parse_symbol", "rank", "scalar",
    "serialize_scalar", "solve_linear", "symbol", "symbol_key", "symbol_name",
]
