"""The p-Frobenius on twisted divided powers and its coefficient families."""

from .coefficients import (
    CoefficientTable,
    b_diagonal,
    b_edge_identity_holds,
    b_from_a,
    b_top,
    b_top_is_factorial_power,
    c_identity_holds,
    coeff_A,
    coeff_B,
    coeff_C,
    a_exchanged_sum_holds,
    q_exchange_identity_holds,
    zbinomial,
    zfactorial,
    zint,
)
from .maps import FrobeniusContext, MixedElem, mixed_to_divided, divided_to_mixed, preserves_filtration

__all__ = [
    "CoefficientTable",
    "b_diagonal",
    "b_edge_identity_holds",
    "b_from_a",
    "b_top",
    "b_top_is_factorial_power",
    "c_identity_holds",
    "coeff_A",
    "coeff_B",
    "coeff_C",
    "a_exchanged_sum_holds",
    "q_exchange_identity_holds",
    "zbinomial",
    "zfactorial",
    "zint",
    "FrobeniusContext",
    "MixedElem",
    "mixed_to_divided",
    "divided_to_mixed",
    "preserves_filtration",
]
