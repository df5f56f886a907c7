"""Invariant plane curves for the Valentiner, icosahedral and Klein groups."""

from .arith import QQ, QZ7, QZ15, QETA, FieldElement, NumberField
from .mpoly import MPoly
from .groups import Mat3, MatrixGroup, closure, generators, lift, molien_series
from .invariants import InvariantTriple, build_invariants, express_in_basic, is_invariant
from .ideals import Ideal, Inconclusive, buchberger, nonsingular_check, only_trivial_zero, transversal_check
from .decisions import basis, decide_nonsingular, six_conditions
from .singularity import SingularityType, certify_irreducible, classify, decide_integral

__version__ = "0.1.0"

__all__ = [
    "QQ", "QZ7", "QZ15", "QETA", "FieldElement", "NumberField", "MPoly",
    "Mat3", "MatrixGroup", "closure", "generators", "lift", "molien_series",
    "InvariantTriple", "build_invariants", "express_in_basic", "is_invariant",
    "Ideal", "Inconclusive", "buchberger", "nonsingular_check", "only_trivial_zero",
    "transversal_check", "basis", "decide_nonsingular", "six_conditions",
    "SingularityType", "certify_irreducible", "classify", "decide_integral",
]
