"""The divided p-power map, its general-p variant and reduction modulo (xi)."""

import logging
from typing import Optional

from ..errors import PreconditionError, TruncationError
from ..rings import RingElem, is_q_divisible, q_binomial, q_char
from ..twisted import TwistedAlgebra
from .ring import DividedPowerRing, DPElem

logger = logging.getLogger(__name__)


def _require_q_char(algebra: TwistedAlgebra) -> int:
    p = q_char(algebra.ring)
    if p == 0:
        raise PreconditionError(f"{algebra.ring} has q-characteristic 0; the divided p-power map needs p > 0")
    return p


def divided_p_power(w: DPElem, trunc: Optional[int] = None) -> DPElem:
    """omega^[k] -> xi^[kp], from A<omega>_{1, y^p} to A<xi>_{q, y}.

    The target precision defaults to p times the source precision.
    """
    alg = w.ring.algebra
    p = _require_q_char(alg)
    if w.ring != DividedPowerRing.omega(alg, p):
        raise PreconditionError(f"divided p-power map expects A<omega>_(1, y^{p}), got {w.ring}")
    N = p * w.trunc if trunc is None else trunc
    target = DividedPowerRing.standard(alg)
    coeffs = [alg.zero()] * (N + 1)
    for k in w.support():
        if k * p > N:
            raise TruncationError(f"omega^[{k}] maps to xi^[{k * p}] beyond truncation {N}")
        coeffs[k * p] = w.coeffs[k]
    return DPElem(target, N, coeffs)


def general_divided_power(algebra: TwistedAlgebra, k: int, p: int, trunc: Optional[int] = None) -> DPElem:
    """Image of omega^[k] under the variant over A<omega>_{q^p, y^p}: prod_{i=2..k} {ip-1, p-1}_q xi^[kp]."""
    if p < 1:
        raise PreconditionError(f"p must be positive, got {p}")
    N = k * p if trunc is None else trunc
    if N < k * p:
        raise TruncationError(f"truncation {N} below xi^[{k * p}]")
    scalar = RingElem.integer(algebra.ring, 1)
    for i in range(2, k + 1):
        scalar = scalar * q_binomial(algebra.q, i * p - 1, p - 1)
    return DividedPowerRing.standard(algebra).basis(k * p, N) * scalar


def general_divided_power_map(w: DPElem, p: int, trunc: Optional[int] = None) -> DPElem:
    """A-linear extension of :func:`general_divided_power` to A<omega>_{q^p, y^p}."""
    alg = w.ring.algebra
    if w.ring != DividedPowerRing.general_source(alg, p):
        raise PreconditionError(f"expected A<omega>_(q^{p}, y^{p}), got {w.ring}")
    N = p * w.trunc if trunc is None else trunc
    out = DPElem(DividedPowerRing.standard(alg), N)
    for k in w.support():
        out = out + general_divided_power(alg, k, p, N) * w.coeffs[k]
    return out


def mod_xi_reduce(a: DPElem) -> DPElem:
    """A<xi>_{q,y} -> A<xi>/(xi) = A<omega>_{1, y^p}: keep xi^[kp] as omega^[k], drop the rest."""
    alg = a.ring.algebra
    p = _require_q_char(alg)
    if not is_q_divisible(alg.ring):
        raise PreconditionError(f"{alg.ring} is not q-divisible; the ideal (xi) is not free on xi^[k], p not dividing k")
    if a.ring != DividedPowerRing.standard(alg):
        raise PreconditionError(f"reduction modulo (xi) expects A<xi>_(q, y), got {a.ring}")
    N = a.trunc // p
    logger.debug("reducing modulo (xi) from precision %d to %d", a.trunc, N)
    return DPElem(DividedPowerRing.omega(alg, p), N, [a.coeffs[k * p] for k in range(N + 1)])
