"""Exact finite operator calculus on polynomials of bounded degree."""

from . import appell, canonical, exactmath, krawtchouk, multivar, operators
from .errors import (CapExceededError, CommutationError, DegenerateSpectrumError, DimensionError,
                     FocalError, NormalizationError, OrderError, SingularError)
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "appell", "canonical", "exactmath", "krawtchouk", "multivar", "operators", "Report",
    "FocalError", "DimensionError", "OrderError", "NormalizationError",
    "DegenerateSpectrumError", "SingularError", "CapExceededError", "CommutationError",
]
