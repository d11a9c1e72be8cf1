"""p-Frobenius coefficients A_{n,i}, their divided versions B_{n,i} and the ratios C_{n,i}.

Everything here lives in Z[t]; specialization t -> q is a ring map, so an
identity checked in Z[t] holds over every descriptor.
"""

import logging
from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING, Optional

from ..errors import DivisibilityError, PreconditionError
from ..rings import QFraction, RingDescriptor, RingElem, RingKind, ZPoly, exact_divide, q_binomial, q_factorial, q_int
from ..rings.zpoly import product

if TYPE_CHECKING:
    from ..storage import DatabaseManager

logger = logging.getLogger(__name__)

ZT = RingDescriptor(kind=RingKind.GENERIC_ZT)


def _base(power: int) -> RingElem:
    return RingElem.q(ZT) ** power


def zint(m: int, power: int = 1) -> ZPoly:
    """(m)_{t^power} in Z[t]."""
    return ZPoly.from_elem(q_int(_base(power), m))


def zfactorial(m: int, power: int = 1) -> ZPoly:
    return ZPoly.from_elem(q_factorial(_base(power), m))


def zbinomial(n: int, k: int, power: int = 1) -> ZPoly:
    return ZPoly.from_elem(q_binomial(_base(power), n, k))


def _t(e: int) -> ZPoly:
    return ZPoly.monomial(e)


def _signed(value: ZPoly, exponent: int) -> ZPoly:
    return -value if exponent % 2 else value


def _check_p(p: int) -> None:
    if p < 2:
        raise PreconditionError(f"the Frobenius coefficients need p >= 2, got {p}")


@lru_cache(maxsize=None)
def coeff_A(n: int, i: int, p: int) -> ZPoly:
    """A_{n,i} = sum_j (-1)^(n-j) t^(p(n-j)(n-j-1)/2) {n, j}_{t^p} {pj, i}_t."""
    _check_p(p)
    total = ZPoly()
    for j in range(n + 1):
        e = n - j
        term = zbinomial(n, j, p) * zbinomial(p * j, i) * _t(p * e * (e - 1) // 2)
        total = total + _signed(term, e)
    return total


def b_from_a(a: ZPoly, n: int, i: int, p: int) -> ZPoly:
    """Solve (i)_t! A = (n)_{t^p}! (p)_t^n B for B.

    Raises DivisibilityError when no integral B exists, which for a genuine
    A_{n,i} would contradict the divisibility theorem.
    """
    try:
        return exact_divide(zfactorial(i) * a, zfactorial(n, p) * zint(p) ** n)
    except DivisibilityError as exc:
        raise DivisibilityError(f"B_({n},{i}) at p={p} is not integral: {exc}") from exc


@lru_cache(maxsize=None)
def coeff_B(n: int, i: int, p: int) -> ZPoly:
    return b_from_a(coeff_A(n, i, p), n, i, p)


@lru_cache(maxsize=None)
def coeff_C(n: int, i: int, p: int) -> QFraction:
    """C_{n,i} = B_{n,i} / B_{n,pn}, reduced in Q(t)."""
    return QFraction(coeff_B(n, i, p), coeff_B(n, p * n, p))


def b_diagonal(n: int, p: int) -> ZPoly:
    """Closed form of B_{n,n}: t^((p-1)n(n-1)/2)."""
    return _t((p - 1) * n * (n - 1) // 2)


def b_top(n: int, p: int) -> ZPoly:
    """Closed form of B_{n,pn}: prod_{k<=n} prod_{0<i<p} (kp-i)_t."""
    return product([zint(k * p - i) for k in range(1, n + 1) for i in range(1, p)])


def c_identity_holds(n: int, i: int, p: int) -> bool:
    """(i)_t! A_{n,i} = (pn)_t! C_{n,i}, cleared of denominators."""
    c = coeff_C(n, i, p)
    return zfactorial(i) * coeff_A(n, i, p) * c.den == zfactorial(p * n) * c.num


def q_exchange_identity_holds(m: int, n: int) -> bool:
    """t^(n(n-1)/2) (1-t)^n (n)_t! {m, n}_t = sum_k (-1)^(n-k) t^(k(k-1)/2) {n, k}_t t^(m(n-k))."""
    one_minus_t = ZPoly([1, -1])
    lhs = _t(n * (n - 1) // 2) * one_minus_t ** n * zfactorial(n) * zbinomial(m, n)
    rhs = ZPoly()
    for k in range(n + 1):
        rhs = rhs + _signed(_t(k * (k - 1) // 2) * zbinomial(n, k) * _t(m * (n - k)), n - k)
    return lhs == rhs


def a_exchanged_sum_holds(n: int, i: int, p: int) -> bool:
    """A_{n,i} vanishes off n <= i <= pn; inside it equals the exchanged sum."""
    a = coeff_A(n, i, p)
    if i < n or i > p * n:
        return a.is_zero
    one_minus_t = ZPoly([1, -1])
    lhs = _t(i * (i - 1) // 2) * one_minus_t ** (i - n) * zfactorial(i) * a
    inner = ZPoly()
    for l in range(i - n + 1):
        inner = inner + _signed(_t(l * (l - 1) // 2) * zbinomial(i, l) * zbinomial(i - l, n, p), i - n + l)
    rhs = zint(p) ** n * zfactorial(n, p) * _t(p * n * (n - 1) // 2) * inner
    return lhs == rhs


def b_edge_identity_holds(n: int, ring: RingDescriptor) -> bool:
    """At q-characteristic p and 1 <= n <= p: (1-q)^(p-n) B_{n,p}(q) = (-1)^(n-1) binom(p, n)."""
    p = ring.declared_q_char
    if p == 0 or not 1 <= n <= p:
        raise PreconditionError(f"needs positive q-characteristic and 1 <= n <= p, got n={n} on {ring}")
    q = RingElem.q(ring)
    lhs = (1 - q) ** (p - n) * coeff_B(n, p, p).specialize(ring)
    sign = 1 if (n - 1) % 2 == 0 else -1
    return lhs == sign * comb(p, n)


def b_top_is_factorial_power(n: int, ring: RingDescriptor) -> bool:
    """At q-characteristic p: B_{n,pn}(q) = ((p-1)_q!)^n."""
    p = ring.declared_q_char
    if p == 0:
        raise PreconditionError(f"{ring} has q-characteristic 0")
    return coeff_B(n, p * n, p).specialize(ring) == q_factorial(RingElem.q(ring), p - 1) ** n


class CoefficientTable:
    """A, B and C coefficients for one p, optionally persisted in DuckDB."""

    def __init__(self, p: int, store: Optional["DatabaseManager"] = None):
        _check_p(p)
        self.p = p
        self.store = store

    def _cached(self, family: str, n: int, i: int, compute) -> ZPoly:
        if self.store is not None:
            stored = self.store.get_coefficient(family, self.p, n, i)
            if stored is not None:
                return ZPoly(stored)
        value = compute(n, i, self.p)
        if self.store is not None:
            self.store.insert_coefficient(family, self.p, n, i, value.to_data())
        return value

    def a(self, n: int, i: int) -> ZPoly:
        return self._cached("A", n, i, coeff_A)

    def b(self, n: int, i: int) -> ZPoly:
        return self._cached("B", n, i, coeff_B)

    def c(self, n: int, i: int) -> QFraction:
        return QFraction(self.b(n, i), self.b(n, self.p * n))

    def rows(self, nmax: int):
        """Yield (n, i, A, B, C) for n <= nmax and i <= pn."""
        for n in range(nmax + 1):
            for i in range(self.p * n + 1):
                yield n, i, self.a(n, i), self.b(n, i), self.c(n, i)
        logger.debug("coefficient table p=%d computed up to n=%d", self.p, nmax)
