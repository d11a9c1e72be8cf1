"""The twisted base algebra A = R[x] or R[x, 1/x] with sigma and its sigma-derivation."""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import Poly, Symbol

from ..errors import DescriptorMismatchError, PreconditionError
from ..rings import RingDescriptor, RingElem, q_int, ring_structure
from ..rings.descriptor import T


class Variant(str, Enum):
    POLYNOMIAL = "polynomial"
    LAURENT = "laurent"


class TwistedAlgebra(BaseModel):
    """A with sigma(x) = q^e x + h and y = x - sigma(x).

    ``q_exponent`` is 1 for A itself and p for the Frobenius source A',
    whose coordinate is named ``x'``.
    """

    model_config = ConfigDict(frozen=True)

    ring: RingDescriptor
    variant: Variant = Variant.POLYNOMIAL
    variable: str = "x"
    q_exponent: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_laurent(self) -> "TwistedAlgebra":
        if self.variant is Variant.LAURENT:
            if self.ring.has_h:
                raise PreconditionError("the Laurent variant needs h = 0")
            if RingElem.q(self.ring).try_invert() is None:
                raise PreconditionError(f"the Laurent variant needs q invertible in {self.ring}")
        return self

    @classmethod
    def polynomial(cls, ring: RingDescriptor) -> "TwistedAlgebra":
        return cls(ring=ring)

    @classmethod
    def laurent(cls, ring: RingDescriptor) -> "TwistedAlgebra":
        return cls(ring=ring, variant=Variant.LAURENT)

    @property
    def q(self) -> RingElem:
        return _structure(self).q

    @property
    def h(self) -> RingElem:
        return _structure(self).h

    @property
    def has_h(self) -> bool:
        return self.ring.has_h

    @property
    def x(self) -> "AElem":
        return AElem.monomial(self, 1)

    @property
    def y(self) -> "AElem":
        """y = (1 - q)x - h; sigma(y) = q y."""
        return self.x - self.x.sigma(1)

    def one(self) -> "AElem":
        return AElem.scalar(self, 1)

    def zero(self) -> "AElem":
        return AElem.scalar(self, 0)

    def __str__(self) -> str:
        base = f"{self.ring}[{self.variable}]"
        return base if self.variant is Variant.POLYNOMIAL else f"{self.ring}[{self.variable}, 1/{self.variable}]"


@dataclass(frozen=True)
class _AlgebraStructure:
    gens: Tuple
    domain: object
    modulus: Optional[Poly]
    x_symbol: Symbol
    q: RingElem
    h: RingElem


@lru_cache(maxsize=None)
def _structure(algebra: TwistedAlgebra) -> _AlgebraStructure:
    base = ring_structure(algebra.ring)
    x_symbol = Symbol(algebra.variable)
    gens = base.gens + (x_symbol,)
    modulus = None
    if base.modulus is not None:
        modulus = Poly(base.modulus.as_expr(), *gens, domain=base.domain)
    q = RingElem.q(algebra.ring) ** algebra.q_exponent
    return _AlgebraStructure(gens, base.domain, modulus, x_symbol, q, RingElem.h(algebra.ring))


@lru_cache(maxsize=None)
def _x_power(algebra: TwistedAlgebra, k: int) -> Poly:
    st = _structure(algebra)
    return Poly(st.x_symbol ** k, *st.gens, domain=st.domain)


Operand = Union["AElem", RingElem, int]


class AElem:
    """An element poly * x^(-shift) of A.

    ``poly`` is a sympy Poly in the ring generators and x, reduced modulo
    the ring's modulus; ``shift`` is zero unless the element has a pole at 0.
    """

    __slots__ = ("algebra", "poly", "shift")

    def __init__(self, algebra: TwistedAlgebra, poly: Poly, shift: int = 0, reduce: bool = True):
        st = _structure(algebra)
        if reduce and st.modulus is not None and not poly.is_zero and poly.degree(T) >= st.modulus.degree(T):
            poly = poly.rem(st.modulus, auto=False)
        if poly.is_zero:
            shift = 0
        elif shift:
            low = min(m[-1] for m in poly.monoms())
            k = min(low, shift)
            if k:
                poly = Poly.from_dict(
                    {m[:-1] + (m[-1] - k,): c for m, c in poly.terms()}, *st.gens, domain=st.domain
                )
                shift -= k
        self.algebra = algebra
        self.poly = poly
        self.shift = shift

    # -- construction -------------------------------------------------

    @classmethod
    def from_coeffs(cls, algebra: TwistedAlgebra, coeffs: Dict[int, RingElem]) -> "AElem":
        """Build sum c_m x^m from ``{m: c_m}``; negative m needs the Laurent variant."""
        st = _structure(algebra)
        coeffs = {m: c for m, c in coeffs.items() if not c == 0}
        if not coeffs:
            return cls(algebra, Poly(0, *st.gens, domain=st.domain))
        low = min(coeffs)
        if low < 0 and algebra.variant is not Variant.LAURENT:
            raise PreconditionError(f"x^{low} is not in {algebra}")
        shift = max(0, -low)
        terms = {}
        for m, c in coeffs.items():
            if isinstance(c, int):
                c = RingElem.integer(algebra.ring, c)
            if c.ring != algebra.ring:
                raise DescriptorMismatchError(f"coefficient over {c.ring} in {algebra}")
            for rm, rc in c.poly.terms():
                terms[rm + (m + shift,)] = rc
        zero_monom = (0,) * len(st.gens)
        return cls(algebra, Poly.from_dict(terms or {zero_monom: 0}, *st.gens, domain=st.domain), shift)

    @classmethod
    def scalar(cls, algebra: TwistedAlgebra, c: Union[RingElem, int]) -> "AElem":
        return cls.from_coeffs(algebra, {0: c})

    @classmethod
    def monomial(cls, algebra: TwistedAlgebra, m: int, c: Union[RingElem, int] = 1) -> "AElem":
        return cls.from_coeffs(algebra, {m: c})

    def terms(self) -> Dict[int, RingElem]:
        """``{m: c_m}`` with nonzero coefficients only."""
        if self.poly.is_zero:
            return {}
        grouped: Dict[int, dict] = {}
        for monom, c in self.poly.terms():
            grouped.setdefault(monom[-1] - self.shift, {})[monom[:-1]] = c
        return {m: RingElem.from_terms(self.algebra.ring, t) for m, t in grouped.items()}

    def coefficient(self, m: int) -> RingElem:
        return self.terms().get(m, RingElem.integer(self.algebra.ring, 0))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: Operand) -> "AElem":
        if isinstance(other, AElem):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise DescriptorMismatchError(f"cannot combine elements of {self.algebra} and {other.algebra}")
            return other
        if isinstance(other, (int, RingElem)):
            return AElem.scalar(self.algebra, other)
        return NotImplemented

    def _aligned(self, other: "AElem") -> Tuple[Poly, Poly, int]:
        if self.shift == other.shift:
            return self.poly, other.poly, self.shift
        if self.shift < other.shift:
            return self.poly * _x_power(self.algebra, other.shift - self.shift), other.poly, other.shift
        return self.poly, other.poly * _x_power(self.algebra, self.shift - other.shift), self.shift

    def __add__(self, other: Operand) -> "AElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, shift = self._aligned(other)
        return AElem(self.algebra, a + b, shift, reduce=False)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "AElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, shift = self._aligned(other)
        return AElem(self.algebra, a - b, shift, reduce=False)

    def __rsub__(self, other: Operand) -> "AElem":
        return -self + other

    def __neg__(self) -> "AElem":
        return AElem(self.algebra, -self.poly, self.shift, reduce=False)

    def __mul__(self, other: Operand) -> "AElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AElem(self.algebra, self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "AElem":
        if n < 0:
            inverse = self.try_invert()
            if inverse is None:
                raise PreconditionError(f"{self} is not a unit of {self.algebra}")
            return inverse ** (-n)
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, RingElem)):
            other = AElem.scalar(self.algebra, other)
        if not isinstance(other, AElem):
            return NotImplemented
        return self.algebra == other.algebra and self.shift == other.shift and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.algebra, self.shift, self.poly))

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def is_one(self) -> bool:
        return self.shift == 0 and self.poly.is_one

    @property
    def degree(self) -> int:
        """Largest exponent of x, -1 for zero (stands in for minus infinity)."""
        if self.is_zero:
            return -1
        return max(m[-1] for m in self.poly.monoms()) - self.shift

    @property
    def low_degree(self) -> int:
        if self.is_zero:
            return 0
        return min(m[-1] for m in self.poly.monoms()) - self.shift

    def is_scalar(self) -> bool:
        return self.is_zero or (self.degree == 0 and self.low_degree == 0)

    def scalar_value(self) -> RingElem:
        if not self.is_scalar():
            raise PreconditionError(f"{self} is not in R")
        return self.coefficient(0)

    def try_invert(self) -> Optional["AElem"]:
        """Units are c x^m with c a unit of R, and m = 0 outside the Laurent variant."""
        terms = self.terms()
        if len(terms) != 1:
            return None
        (m, c), = terms.items()
        if m != 0 and self.algebra.variant is not Variant.LAURENT:
            return None
        inverse = c.try_invert()
        if inverse is None:
            return None
        return AElem.monomial(self.algebra, -m, inverse)

    def divide_by_x(self, k: int) -> "AElem":
        """Exact division by x^k."""
        if k == 0:
            return self
        if self.algebra.variant is not Variant.LAURENT and not self.is_zero and self.low_degree < k:
            raise PreconditionError(f"x^{k} does not divide {self}")
        return AElem(self.algebra, self.poly, self.shift + k, reduce=False)

    # -- twisted structure --------------------------------------------

    def sigma(self, n: int = 1) -> "AElem":
        """sigma^n, with x -> q^n x + (n)_q h."""
        if n == 0 or self.is_zero:
            return self
        alg = self.algebra
        q = alg.q
        if not alg.has_h:
            return AElem.from_coeffs(alg, {m: c * q ** (n * m) for m, c in self.terms().items()})
        result = alg.zero()
        for m, c in self.terms().items():
            result = result + _sigma_power_of_x(alg, n, m) * c
        return result

    def derive(self) -> "AElem":
        """The sigma-derivation with d(x) = 1."""
        alg = self.algebra
        if not alg.has_h:
            return AElem.from_coeffs(
                alg, {m - 1: c * q_int(alg.q, m) for m, c in self.terms().items() if m != 0}
            )
        result = alg.zero()
        for m, c in self.terms().items():
            result = result + _derive_power_of_x(alg, m) * c
        return result

    # -- export -------------------------------------------------------

    def to_data(self) -> list:
        """Sparse ``[exponent, coefficient data]`` pairs in increasing exponent."""
        return [[m, c.to_data()] for m, c in sorted(self.terms().items())]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        var = self.algebra.variable
        parts = []
        for m, c in sorted(self.terms().items(), reverse=True):
            mono = "" if m == 0 else (var if m == 1 else f"{var}^{m}")
            coeff = str(c)
            if not mono:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AElem({self.algebra}, {self})"


@lru_cache(maxsize=None)
def _sigma_power_of_x(algebra: TwistedAlgebra, n: int, m: int) -> AElem:
    if m == 0:
        return algebra.one()
    image = AElem.monomial(algebra, 1, algebra.q ** n) + AElem.scalar(algebra, q_int(algebra.q, n) * algebra.h)
    return _sigma_power_of_x(algebra, n, m - 1) * image


@lru_cache(maxsize=None)
def _derive_power_of_x(algebra: TwistedAlgebra, m: int) -> AElem:
    # d(x^m) = x^(m-1) + sigma(x) d(x^(m-1))
    if m == 0:
        return algebra.zero()
    return AElem.monomial(algebra, m - 1) + algebra.x.sigma(1) * _derive_power_of_x(algebra, m - 1)


def sigma_apply(z, n: int = 1):
    """sigma^n on A, A[xi] or the divided power ring, whichever z lives in."""
    return z.sigma(n)


def derive(z: AElem) -> AElem:
    return z.derive()
