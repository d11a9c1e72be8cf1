"""The twisted Weyl algebra, its duality with divided powers and the p-curvature."""

from .curvature import (
    CurvaturePoly,
    center_basis,
    centralizer_basis,
    curvature_commutes_with_x,
    expected_center,
    expected_centralizer,
    p_curvature,
    spanned_by,
    spans_equal,
    weyl_vector,
)
from .duality import as_functional, weyl_mul_via_duality
from .operators import WeylElem, commutator, weyl_apply, weyl_mul

__all__ = [
    "CurvaturePoly",
    "center_basis",
    "centralizer_basis",
    "curvature_commutes_with_x",
    "expected_center",
    "expected_centralizer",
    "p_curvature",
    "spanned_by",
    "spans_equal",
    "weyl_vector",
    "as_functional",
    "weyl_mul_via_duality",
    "WeylElem",
    "commutator",
    "weyl_apply",
    "weyl_mul",
]
