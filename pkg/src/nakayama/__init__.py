"""Exact homological invariants of Nakayama and acyclic monomial algebras."""

from .core import INF, Interval, KupischSeries, NakayamaAlgebra, ResolutionView
from .errors import (
    NakayamaError,
    NonUnimodularError,
    SearchBoundExceeded,
    SingularMatrixError,
    TheoremViolation,
    ValidationError,
)
from .linalg import BruhatFactors, Matrix, Permutation
from .verdict import Verdict

__all__ = [
    "INF",
    "BruhatFactors",
    "Interval",
    "KupischSeries",
    "Matrix",
    "NakayamaAlgebra",
    "NakayamaError",
    "NonUnimodularError",
    "Permutation",
    "ResolutionView",
    "SearchBoundExceeded",
    "SingularMatrixError",
    "TheoremViolation",
    "ValidationError",
    "Verdict",
]
