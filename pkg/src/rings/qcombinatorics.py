"""q-integers, q-factorials, Gaussian binomials and the q-characteristic.

All functions take the base ``q`` as a RingElem, so the same tables serve
q itself, q^p and q^2. Results are memoized per (base, arguments).
"""

import logging
from functools import lru_cache
from math import comb
from typing import Optional

from ..config import get_settings
from ..errors import InternalConsistencyError, PreconditionError
from .descriptor import RingDescriptor
from .element import RingElem

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def q_int(base: RingElem, m: int) -> RingElem:
    """(m)_q = 1 + q + ... + q^(m-1); for m < 0, (m)_q = -q^m (-m)_q."""
    if m < 0:
        inverse = base.try_invert()
        if inverse is None:
            raise PreconditionError(f"(m)_q for m={m} needs q={base} invertible in {base.ring}")
        return -(inverse ** (-m)) * q_int(base, -m)
    if m == 0:
        return RingElem.integer(base.ring, 0)
    return q_int(base, m - 1) + base ** (m - 1)


@lru_cache(maxsize=None)
def q_factorial(base: RingElem, m: int) -> RingElem:
    if m < 0:
        raise PreconditionError(f"q-factorial of negative {m}")
    if m == 0:
        return RingElem.integer(base.ring, 1)
    return q_factorial(base, m - 1) * q_int(base, m)


@lru_cache(maxsize=None)
def q_binomial(base: RingElem, n: int, k: int) -> RingElem:
    """Gaussian binomial by the Pascal recurrence; zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return RingElem.integer(base.ring, 0)
    if k == 0 or k == n:
        return RingElem.integer(base.ring, 1)
    return q_binomial(base, n - 1, k - 1) + base ** k * q_binomial(base, n - 1, k)


def q_char(ring: RingDescriptor, bound: Optional[int] = None) -> int:
    """Smallest m > 0 with (m)_q = 0, or 0 when none exists below the bound.

    The scan result must match the order the descriptor declares.
    """
    limit = max(bound or get_settings().qchar_scan_bound, ring.declared_q_char)
    base = RingElem.q(ring)
    found = 0
    for m in range(1, limit + 1):
        if q_int(base, m).is_zero:
            found = m
            break
    if found != ring.declared_q_char:
        raise InternalConsistencyError(
            f"q-characteristic scan of {ring} found {found}, descriptor declares {ring.declared_q_char}"
        )
    return found


def q_lucas(ring: RingDescriptor, n: int, k: int) -> RingElem:
    """binom(n1, k1) * binom(n0, k0)_q for the base-p digits of n and k."""
    p = q_char(ring)
    if p == 0:
        raise PreconditionError(f"{ring} has q-characteristic 0; the Lucas factorization needs p > 0")
    n1, n0 = divmod(n, p)
    k1, k0 = divmod(k, p)
    classical = comb(n1, k1) if 0 <= k1 <= n1 else 0
    return RingElem.integer(ring, classical) * q_binomial(RingElem.q(ring), n0, k0)


def is_q_divisible(ring: RingDescriptor) -> bool:
    """Every nonzero q-integer is a unit of R."""
    p = q_char(ring)
    base = RingElem.q(ring)
    if p == 0:
        # (2)_q = 1 + q is never a unit in the generic rings
        return q_int(base, 2).is_unit()
    return all(q_int(base, m).is_unit() for m in range(1, p))


def is_q_flat(ring: RingDescriptor) -> bool:
    """Every nonzero q-integer is regular; all supported rings are domains."""
    p = q_char(ring)
    base = RingElem.q(ring)
    return all(not q_int(base, m).is_zero for m in range(1, p or 2))


class QContext:
    """Bundles the q-analogs over one ring and one base (q by default, q^power otherwise)."""

    def __init__(self, ring: RingDescriptor, power: int = 1):
        self.ring = ring
        self.power = power
        self.q = RingElem.q(ring) ** power

    def integer(self, m: int) -> RingElem:
        return q_int(self.q, m)

    def factorial(self, m: int) -> RingElem:
        return q_factorial(self.q, m)

    def binomial(self, n: int, k: int) -> RingElem:
        return q_binomial(self.q, n, k)

    @property
    def char(self) -> int:
        return q_char(self.ring)

    def __repr__(self) -> str:
        return f"QContext({self.ring}, q^{self.power})"
