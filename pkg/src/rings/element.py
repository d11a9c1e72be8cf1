"""Exact scalars: elements of a described coefficient ring.

Elements wrap a sympy ``Poly`` in t (and s on Zts) kept in canonical form:
cyclotomic representatives have degree below deg Phi_p, and on F_p the
class of t is reduced to the constant 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from sympy import GF, QQ, ZZ, Poly, Rational, cyclotomic_poly
from sympy.polys.polyerrors import NotInvertible

from ..errors import DescriptorMismatchError, PreconditionError
from .descriptor import RingDescriptor, RingKind, T

Scalar = Union["RingElem", int]


@dataclass(frozen=True)
class RingStructure:
    """Generators, sympy domain and reduction modulus of a descriptor."""

    gens: Tuple
    domain: object
    modulus: Optional[Poly]


@lru_cache(maxsize=None)
def ring_structure(ring: RingDescriptor) -> RingStructure:
    kind = ring.kind
    if kind is RingKind.GENERIC_ZT or kind is RingKind.GENERIC_ZTS:
        return RingStructure(ring.gens, ZZ, None)
    if kind is RingKind.CYCLOTOMIC_FIELD:
        return RingStructure(ring.gens, QQ, Poly(cyclotomic_poly(ring.p, T), T, domain=QQ))
    if kind is RingKind.CYCLOTOMIC_RING:
        return RingStructure(ring.gens, ZZ, Poly(cyclotomic_poly(ring.p, T), T, domain=ZZ))
    domain = GF(ring.p)
    return RingStructure(ring.gens, domain, Poly(T - 1, T, domain=domain))


def _export_coefficient(ring: RingDescriptor, value) -> Union[int, str]:
    if ring.kind is RingKind.PRIME_FIELD:
        return int(value) % ring.p
    value = Rational(value)
    if value.q == 1:
        return int(value.p)
    return f"{value.p}/{value.q}"


class RingElem:
    """An element of R in canonical form. Immutable and hashable."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: RingDescriptor, poly: Poly, reduce: bool = True):
        modulus = ring_structure(ring).modulus
        if reduce and modulus is not None and not poly.is_zero and poly.degree() >= modulus.degree():
            poly = poly.rem(modulus, auto=False)
        self.ring = ring
        self.poly = poly

    # -- construction -------------------------------------------------

    @classmethod
    def integer(cls, ring: RingDescriptor, n: int) -> "RingElem":
        struct = ring_structure(ring)
        return cls(ring, Poly(n, *struct.gens, domain=struct.domain), reduce=False)

    @classmethod
    def q(cls, ring: RingDescriptor) -> "RingElem":
        struct = ring_structure(ring)
        return cls(ring, Poly(T, *struct.gens, domain=struct.domain))

    @classmethod
    def h(cls, ring: RingDescriptor) -> "RingElem":
        """s on Zts, zero elsewhere."""
        struct = ring_structure(ring)
        expr = struct.gens[1] if ring.has_h else 0
        return cls(ring, Poly(expr, *struct.gens, domain=struct.domain), reduce=False)

    @classmethod
    def from_terms(cls, ring: RingDescriptor, terms: dict) -> "RingElem":
        """Build from ``{monomial exponent tuple: coefficient}``."""
        struct = ring_structure(ring)
        return cls(ring, Poly.from_dict(terms or {(0,) * len(struct.gens): 0}, *struct.gens, domain=struct.domain))

    @classmethod
    def from_data(cls, ring: RingDescriptor, data: list) -> "RingElem":
        """Inverse of :meth:`to_data`."""
        if ring.has_h:
            terms = {(int(i), int(j)): Rational(str(c)) for i, j, c in data}
        else:
            terms = {(i,): Rational(str(c)) for i, c in enumerate(data)}
        return cls.from_terms(ring, terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: Scalar) -> "RingElem":
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise DescriptorMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, int):
            return RingElem.integer(self.ring, other)
        return NotImplemented

    def __add__(self, other: Scalar) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.poly + other.poly, reduce=False)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.poly - other.poly, reduce=False)

    def __rsub__(self, other: Scalar) -> "RingElem":
        return -self + other

    def __neg__(self) -> "RingElem":
        return RingElem(self.ring, -self.poly, reduce=False)

    def __mul__(self, other: Scalar) -> "RingElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            inverse = self.try_invert()
            if inverse is None:
                raise PreconditionError(f"{self} is not a unit in {self.ring}; negative powers undefined")
            return inverse ** (-n)
        result = RingElem.integer(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RingElem.integer(self.ring, other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.ring, self.poly))

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def is_one(self) -> bool:
        return self.poly.is_one

    def try_invert(self) -> Optional["RingElem"]:
        """Return the inverse, or None when this element is not a unit."""
        if self.is_zero:
            return None
        kind = self.ring.kind
        if kind is RingKind.GENERIC_ZT or kind is RingKind.GENERIC_ZTS:
            # units of Z[t] and Z[t, s] are +1 and -1
            if self.poly.is_ground and abs(self.poly.LC()) == 1:
                return self
            return None
        modulus = ring_structure(self.ring).modulus
        if kind is RingKind.CYCLOTOMIC_RING:
            try:
                inverse = self.poly.to_field().invert(modulus.to_field())
            except NotInvertible:
                return None
            if any(Rational(c).q != 1 for c in inverse.coeffs()):
                return None
            return RingElem(self.ring, inverse.set_domain(ZZ))
        try:
            return RingElem(self.ring, self.poly.invert(modulus))
        except NotInvertible:
            return None

    def is_unit(self) -> bool:
        return self.try_invert() is not None

    def frobenius(self, p: int) -> "RingElem":
        """Apply F*_R: t -> t^p (and s -> s^p) on the generic rings, identity elsewhere.

        On CycF, CycR and Fp, q^p is 1 and q -> 1 is not a ring endomorphism, so the
        Frobenius base change is taken to be the identity there.
        """
        if self.ring.kind not in (RingKind.GENERIC_ZT, RingKind.GENERIC_ZTS):
            return self
        terms = {tuple(e * p for e in monom): c for monom, c in self.poly.terms()}
        return RingElem.from_terms(self.ring, terms)

    # -- export -------------------------------------------------------

    def to_data(self) -> list:
        """Dense little-endian coefficients in t; sparse ``[i, j, c]`` triples on Zts."""
        if self.is_zero:
            return []
        if self.ring.has_h:
            return sorted([i, j, _export_coefficient(self.ring, c)] for (i, j), c in self.poly.terms())
        coeffs = list(reversed(self.poly.all_coeffs()))
        return [_export_coefficient(self.ring, c) for c in coeffs]

    def to_fraction(self) -> Fraction:
        """The value of a constant element as a Fraction."""
        if not self.poly.is_ground:
            raise PreconditionError(f"{self} is not a constant")
        value = Rational(self.poly.LC()) if not self.is_zero else Rational(0)
        if self.ring.kind is RingKind.PRIME_FIELD:
            return Fraction(int(value) % self.ring.p)
        return Fraction(int(value.p), int(value.q))

    def __str__(self) -> str:
        if self.ring.kind is RingKind.PRIME_FIELD:
            return str(self.to_data()[0] if not self.is_zero else 0)
        return str(self.poly.as_expr()).replace("t", "q")

    def __repr__(self) -> str:
        return f"RingElem({self.ring}, {self})"


def scalars(ring: RingDescriptor, values: List[int]) -> List[RingElem]:
    return [RingElem.integer(ring, v) for v in values]
