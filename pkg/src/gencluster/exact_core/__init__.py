"""Exact arithmetic substrate: rational matrices, dual numbers, polynomials."""

from .dual import Dual, deriv, value
from .gradient import gradient, gradients, jacobian, lift
from .linalg import (
    GenericityError,
    antidiagonal,
    block,
    charpoly_coeffs,
    cols,
    cyclic_shift,
    det,
    diagonal_part,
    elementary,
    equal,
    hstack,
    identity,
    interpolate,
    inverse,
    is_zero,
    mat,
    matmul,
    mpow,
    pick_cols,
    pick_rows,
    rank,
    rows,
    solve,
    strict_lower,
    strict_upper,
    trace,
    unit,
    upper_shift,
    values,
    zeros,
)
from .poly import MultiPoly, PolyDivisionError, Ring, poly_divide_exact, poly_divmod

__all__ = [
    "Dual", "deriv", "value", "gradient", "gradients", "jacobian", "lift", "GenericityError",
    "antidiagonal", "block", "charpoly_coeffs", "cols", "cyclic_shift", "det",
    "diagonal_part", "elementary", "equal", "hstack", "identity", "interpolate",
    "inverse", "is_zero", "mat", "matmul", "mpow", "pick_cols", "pick_rows", "rank",
    "rows", "solve", "strict_lower", "strict_upper", "trace", "unit", "upper_shift",
    "values", "zeros", "MultiPoly", "PolyDivisionError", "Ring", "poly_divide_exact",
    "poly_divmod",
]
