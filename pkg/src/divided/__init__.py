"""Twisted divided powers: the ring, the divided p-power map, comultiplication and Taylor maps."""

from .comul import (
    DPTensorElem,
    ThetaPoly,
    reduction_commutes_with_comul,
    comul_left,
    comul_right,
    dp_comul,
    is_coassociative,
    mod_xi_reduce_tensor,
    pairing,
    pairing_table,
    pairing_tensor,
    tensor,
    theta_comul,
)
from .pmap import divided_p_power, general_divided_power, general_divided_power_map, mod_xi_reduce
from .ring import (
    DividedPowerRing,
    DPElem,
    dp_from_poly,
    dp_mul,
    dp_sigma,
    dp_sigma_iterated,
    dp_twisted_mul,
    structure_constant,
)
from .taylor import taylor_reduces_to_identity, truncated_taylor_bijective, horizontal_sections, is_taylor_constant, taylor0

__all__ = [
    "DPTensorElem",
    "ThetaPoly",
    "reduction_commutes_with_comul",
    "comul_left",
    "comul_right",
    "dp_comul",
    "is_coassociative",
    "mod_xi_reduce_tensor",
    "pairing",
    "pairing_table",
    "pairing_tensor",
    "tensor",
    "theta_comul",
    "divided_p_power",
    "general_divided_power",
    "general_divided_power_map",
    "mod_xi_reduce",
    "DividedPowerRing",
    "DPElem",
    "dp_from_poly",
    "dp_mul",
    "dp_sigma",
    "dp_sigma_iterated",
    "dp_twisted_mul",
    "structure_constant",
    "taylor_reduces_to_identity",
    "truncated_taylor_bijective",
    "horizontal_sections",
    "is_taylor_constant",
    "taylor0",
]
