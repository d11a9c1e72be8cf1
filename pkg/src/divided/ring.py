"""Truncated twisted divided power rings A<xi>_{Q,Y} / I^[N+1].

A ring is fixed by the algebra A, the base Q of its q-analogs and the
parameter Y in A. The standard ring has (Q, Y) = (q, y); the others used
here are (1, y^p) below the divided p-power map and (q^p, .) on the
Frobenius side. sigma acts when sigma(Y) = Q Y.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import DescriptorMismatchError, PreconditionError, TruncationError
from ..rings import RingElem, q_binomial, q_factorial
from ..twisted import AElem, TwistedAlgebra, XiPoly, to_twisted_basis

Coefficient = Union[AElem, RingElem, int]


@dataclass(frozen=True)
class DividedPowerRing:
    algebra: TwistedAlgebra
    qbase: RingElem
    y: AElem
    name: str = "xi"

    @classmethod
    def standard(cls, algebra: TwistedAlgebra) -> "DividedPowerRing":
        return cls(algebra, algebra.q, algebra.y, "xi")

    @classmethod
    def omega(cls, algebra: TwistedAlgebra, p: int) -> "DividedPowerRing":
        """A<omega>_{1, y^p}, the source of the divided p-power map."""
        return cls(algebra, RingElem.integer(algebra.ring, 1), algebra.y ** p, "omega")

    @classmethod
    def general_source(cls, algebra: TwistedAlgebra, p: int) -> "DividedPowerRing":
        """A<omega>_{q^p, y^p}."""
        return cls(algebra, algebra.q ** p, algebra.y ** p, "omega")

    def basis(self, k: int, trunc: int) -> "DPElem":
        return DPElem.basis(self, k, trunc)

    def one(self, trunc: int) -> "DPElem":
        return DPElem.basis(self, 0, trunc)

    def __str__(self) -> str:
        return f"{self.algebra}<{self.name}>_({self.qbase}, {self.y})"


@lru_cache(maxsize=None)
def structure_constant(ring: DividedPowerRing, m: int, n: int, i: int) -> AElem:
    """Coefficient of xi^[m+n-i] in xi^[m] xi^[n]:

    (-1)^i Q^(i(i-1)/2) {m+n-i, m}_Q {m, i}_Q Y^i.
    """
    Q = ring.qbase
    scalar = Q ** (i * (i - 1) // 2) * q_binomial(Q, m + n - i, m) * q_binomial(Q, m, i)
    value = ring.y ** i * scalar
    return -value if i % 2 else value


class DPElem:
    """sum_{i <= trunc} z_i xi^[i] in a truncated divided power ring."""

    __slots__ = ("ring", "trunc", "coeffs")

    def __init__(self, ring: DividedPowerRing, trunc: int, coeffs: Sequence[Coefficient] = ()):
        if trunc < 0:
            raise TruncationError(f"negative truncation {trunc}")
        alg = ring.algebra
        values = [c if isinstance(c, AElem) else AElem.scalar(alg, c) for c in list(coeffs)[: trunc + 1]]
        values += [alg.zero()] * (trunc + 1 - len(values))
        self.ring = ring
        self.trunc = trunc
        self.coeffs: Tuple[AElem, ...] = tuple(values)

    @classmethod
    def basis(cls, ring: DividedPowerRing, k: int, trunc: int) -> "DPElem":
        if k > trunc:
            return cls(ring, trunc)
        return cls(ring, trunc, [0] * k + [1])

    @classmethod
    def scalar(cls, ring: DividedPowerRing, c: Coefficient, trunc: int) -> "DPElem":
        return cls(ring, trunc, [c])

    def coefficient(self, k: int) -> AElem:
        if 0 <= k <= self.trunc:
            return self.coeffs[k]
        return self.ring.algebra.zero()

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def support(self) -> List[int]:
        return [k for k, c in enumerate(self.coeffs) if not c.is_zero]

    def _check(self, other: "DPElem") -> None:
        if other.ring != self.ring:
            raise DescriptorMismatchError(f"{self.ring} and {other.ring} differ")
        if other.trunc != self.trunc:
            raise DescriptorMismatchError(f"truncations {self.trunc} and {other.trunc} differ")

    def __add__(self, other: "DPElem") -> "DPElem":
        self._check(other)
        return DPElem(self.ring, self.trunc, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "DPElem") -> "DPElem":
        self._check(other)
        return DPElem(self.ring, self.trunc, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "DPElem":
        return DPElem(self.ring, self.trunc, [-c for c in self.coeffs])

    def __mul__(self, other: Union["DPElem", Coefficient]) -> "DPElem":
        if isinstance(other, DPElem):
            return dp_mul(self, other)
        return DPElem(self.ring, self.trunc, [c * other for c in self.coeffs])

    def __rmul__(self, other: Coefficient) -> "DPElem":
        return DPElem(self.ring, self.trunc, [c * other for c in self.coeffs])

    def __pow__(self, n: int) -> "DPElem":
        result = self.ring.one(self.trunc)
        for _ in range(n):
            result = dp_mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DPElem):
            return NotImplemented
        return self.ring == other.ring and self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.trunc, self.coeffs))

    def retrunc(self, trunc: int) -> "DPElem":
        """Project to a lower precision, or embed into a higher one."""
        return DPElem(self.ring, trunc, self.coeffs)

    def sigma(self, n: int = 1) -> "DPElem":
        return dp_sigma(self, n)

    def to_data(self) -> dict:
        return {
            "trunc": self.trunc,
            "coeffs": [[k, c.to_data()] for k, c in enumerate(self.coeffs) if not c.is_zero],
        }

    def __str__(self) -> str:
        terms = [f"({c})*{self.ring.name}^[{k}]" for k, c in enumerate(self.coeffs) if not c.is_zero]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"DPElem(trunc={self.trunc}, {self})"


def dp_mul(a: DPElem, b: DPElem) -> DPElem:
    """Product by the divided power multiplication rule, truncated at the common precision."""
    a._check(b)
    ring, N = a.ring, a.trunc
    alg = ring.algebra
    out = [alg.zero()] * (N + 1)
    for m in a.support():
        for n in b.support():
            if max(m, n) > N:
                continue
            zz = a.coeffs[m] * b.coeffs[n]
            for i in range(min(m, n) + 1):
                k = m + n - i
                if k > N:
                    continue
                out[k] = out[k] + zz * structure_constant(ring, m, n, i)
    return DPElem(ring, N, out)


def dp_from_poly(f: XiPoly, trunc: int, ring: Optional[DividedPowerRing] = None) -> DPElem:
    """A[xi] -> A<xi>: xi^(n) -> (n)_q! xi^[n]."""
    ring = ring or DividedPowerRing.standard(f.algebra)
    if ring.algebra != f.algebra:
        raise DescriptorMismatchError("polynomial and divided power ring live over different algebras")
    coeffs = to_twisted_basis(f)
    return DPElem(ring, trunc, [c * q_factorial(ring.qbase, n) for n, c in enumerate(coeffs[: trunc + 1])])


@lru_cache(maxsize=None)
def _sigma_image(ring: DividedPowerRing, n: int, m: int, trunc: int) -> DPElem:
    # sigma^n(xi^[m]) = sum_i {n+i-1, i}_Q Y^i xi^[m-i]
    coeffs = [ring.algebra.zero()] * (trunc + 1)
    for i in range(m + 1):
        coeffs[m - i] = ring.y ** i * q_binomial(ring.qbase, n + i - 1, i)
    return DPElem(ring, trunc, coeffs)


def dp_sigma(a: DPElem, n: int = 1) -> DPElem:
    """sigma^n by the closed form; sigma is sigma-linear on coefficients."""
    if n < 0:
        raise PreconditionError("only nonnegative powers of sigma act on divided powers")
    if n == 0:
        return a
    out = DPElem(a.ring, a.trunc)
    for m in a.support():
        out = out + _sigma_image(a.ring, n, m, a.trunc) * a.coeffs[m].sigma(n)
    return out


def dp_sigma_iterated(a: DPElem, n: int) -> DPElem:
    """n-fold application of sigma, using only sigma(xi^[m]) = sum_i Y^i xi^[m-i]."""
    out = a
    for _ in range(n):
        step = DPElem(a.ring, a.trunc)
        for m in out.support():
            coeffs = [a.ring.algebra.zero()] * (a.trunc + 1)
            for i in range(m + 1):
                coeffs[m - i] = a.ring.y ** i
            step = step + DPElem(a.ring, a.trunc, coeffs) * out.coeffs[m].sigma(1)
        out = step
    return out


def dp_twisted_mul(algebra: TwistedAlgebra, n: int, m: int, trunc: Optional[int] = None) -> DPElem:
    """xi^[n] sigma^n(xi^[m]); equals {m+n, n}_q xi^[n+m]."""
    ring = DividedPowerRing.standard(algebra)
    N = n + m if trunc is None else trunc
    if N < n + m:
        raise TruncationError(f"truncation {N} below degree {n + m}")
    return dp_mul(ring.basis(n, N), dp_sigma(ring.basis(m, N), n))
