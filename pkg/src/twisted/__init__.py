"""The twisted base algebra, A[xi] and twisted powers."""

from .algebra import AElem, TwistedAlgebra, Variant, derive, sigma_apply
from .xipoly import (
    PInfQuotient,
    XiPoly,
    from_twisted_basis,
    q1_comul_check,
    substitute_x_plus_xi,
    to_twisted_basis,
    twisted_mul_in_twisted_basis,
    twisted_power,
    x_plus_xi_power,
)

__all__ = [
    "AElem",
    "TwistedAlgebra",
    "Variant",
    "derive",
    "sigma_apply",
    "PInfQuotient",
    "XiPoly",
    "from_twisted_basis",
    "q1_comul_check",
    "substitute_x_plus_xi",
    "to_twisted_basis",
    "twisted_mul_in_twisted_basis",
    "twisted_power",
    "x_plus_xi_power",
]
