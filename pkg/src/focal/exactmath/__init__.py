"""Exact rationals, dense matrices, truncated series and linear-algebra kernels."""

from .linalg import (EchelonBasis, pad, poly_degree, poly_eval, poly_mul, rank,
                     triangular_eigenvectors)
from .matrix import (Matrix, basis_vector, commutator, kron, mat_mul, vec_add, vec_scale,
                     vec_sub)
from .mseries import MSeries
from .rational import Rational, as_rational, format_rational, parse_rational
from .series import (Series, atanh_series, binomial_series, cosh_series, exp_series,
                     log1p_series, log_cosh_series, sech_series, series_compose, series_exp,
                     series_mul, series_reciprocal, series_reversion,
                     series_reversion_lagrange, sinh_series, tanh_series)

__all__ = [
    "Rational", "parse_rational", "format_rational", "as_rational",
    "Matrix", "mat_mul", "kron", "commutator", "basis_vector", "vec_add", "vec_sub",
    "vec_scale",
    "Series", "series_mul", "series_reciprocal", "series_compose", "series_reversion",
    "series_reversion_lagrange", "series_exp", "exp_series", "cosh_series", "sinh_series",
    "sech_series", "tanh_series", "log1p_series", "atanh_series", "log_cosh_series",
    "binomial_series",
    "MSeries",
    "triangular_eigenvectors", "EchelonBasis", "rank", "poly_eval", "poly_degree",
    "poly_mul", "pad",
]
