"""Affine Hilbert functions, degree-d closures and their bounds over GF(q)^n."""

from .bounds import (
    THEOREM_IDS,
    BoundReport,
    HypothesisError,
    LatticeFunctions,
    exhaustive_sweep,
    fkg_check,
)
from .closures import closure, multiplicity_closure
from .fields import GF, FiniteField, field_from_order
from .generators import CurveSpec, InstanceBundle, line, nikodym_instance, partial_lines_instance, product_set
from .ideals import PointSet, hilbert_function, hilbert_profile, ideal_slice, standard_monomials
from .monomials import Staircase, grlex_compare
from .polynomials import Polynomial, hasse_derivative, order_at
from .reporting import report_emit

__version__ = "0.1.0"

__all__ = [
    "GF", "FiniteField", "field_from_order",
    "Staircase", "grlex_compare",
    "Polynomial", "hasse_derivative", "order_at",
    "PointSet", "hilbert_function", "hilbert_profile", "ideal_slice", "standard_monomials",
    "closure", "multiplicity_closure",
    "CurveSpec", "InstanceBundle", "line", "nikodym_instance", "partial_lines_instance", "product_set",
    "THEOREM_IDS", "BoundReport", "HypothesisError", "LatticeFunctions", "exhaustive_sweep", "fkg_check",
    "report_emit",
]
