"""Coefficient rings, q-analogs and exact linear algebra."""

from .descriptor import RingDescriptor, RingKind
from .element import RingElem, ring_structure
from .qcombinatorics import (
    QContext,
    is_q_divisible,
    is_q_flat,
    q_binomial,
    q_char,
    q_factorial,
    q_int,
    q_lucas,
)
from .zpoly import QFraction, ZPoly, exact_divide

__all__ = [
    "RingDescriptor",
    "RingKind",
    "RingElem",
    "ring_structure",
    "QContext",
    "is_q_divisible",
    "is_q_flat",
    "q_binomial",
    "q_char",
    "q_factorial",
    "q_int",
    "q_lucas",
    "QFraction",
    "ZPoly",
    "exact_divide",
]
