"""Phi, the Azumaya action and the twisted Simpson correspondence on finite free modules."""

from .correspondence import (
    RoundtripResult,
    are_similar,
    default_suite,
    higgs_from_rows,
    higgs_suite,
    roundtrip,
    run_suite,
)
from .modules import (
    HiggsModule,
    QDiffModule,
    higgs_to_qdiff,
    is_quasi_nilpotent,
    iterates,
    nilpotency_index,
    p_curvature_matrix,
    phi_horizontal_sections,
    qdiff_to_higgs,
)
from .phi import CentralPoly, PhiContext, azumaya_action_holds, azumaya_matrix, azumaya_product

__all__ = [
    "RoundtripResult",
    "are_similar",
    "default_suite",
    "higgs_from_rows",
    "higgs_suite",
    "roundtrip",
    "run_suite",
    "HiggsModule",
    "QDiffModule",
    "higgs_to_qdiff",
    "is_quasi_nilpotent",
    "iterates",
    "nilpotency_index",
    "p_curvature_matrix",
    "phi_horizontal_sections",
    "qdiff_to_higgs",
    "CentralPoly",
    "PhiContext",
    "azumaya_action_holds",
    "azumaya_matrix",
    "azumaya_product",
]
