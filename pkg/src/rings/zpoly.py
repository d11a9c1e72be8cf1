"""Integer polynomials in t before specialization, and reduced fractions of them."""

from typing import Iterable, List, Sequence, Union

from sympy import QQ, ZZ, Poly, Rational

from ..errors import DivisibilityError, PreconditionError
from .descriptor import RingDescriptor, RingKind, T
from .element import RingElem, ring_structure


class ZPoly:
    """An element of Z[t] as a dense little-endian coefficient tuple.

    Trailing zeros are stripped, so the zero polynomial is ``()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def from_poly(cls, poly: Poly) -> "ZPoly":
        if poly.is_zero:
            return cls()
        return cls(int(c) for c in reversed(poly.all_coeffs()))

    @classmethod
    def from_elem(cls, elem: RingElem) -> "ZPoly":
        """Read back an element of the generic ring Zt."""
        if elem.ring.kind is not RingKind.GENERIC_ZT:
            raise PreconditionError(f"ZPoly lives over Zt, not {elem.ring}")
        return cls.from_poly(elem.poly)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "ZPoly":
        return cls([0] * degree + [coeff])

    @property
    def poly(self) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], T, domain=ZZ)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: "ZPoly") -> "ZPoly":
        return ZPoly.from_poly(self.poly + _lift(other).poly)

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return ZPoly.from_poly(self.poly - _lift(other).poly)

    def __neg__(self) -> "ZPoly":
        return ZPoly(-c for c in self.coeffs)

    def __mul__(self, other: Union["ZPoly", int]) -> "ZPoly":
        return ZPoly.from_poly(self.poly * _lift(other).poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZPoly":
        return ZPoly.from_poly(self.poly ** n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ZPoly([other])
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def compose_power(self, p: int) -> "ZPoly":
        """Substitute t -> t^p."""
        values = [0] * (p * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            values[p * i] = c
        return ZPoly(values)

    def specialize(self, ring: RingDescriptor) -> RingElem:
        """Image under Z[t] -> R, t -> q."""
        struct = ring_structure(ring)
        pad = (0,) * (len(struct.gens) - 1)
        terms = {(i,) + pad: c for i, c in enumerate(self.coeffs) if c}
        return RingElem.from_terms(ring, terms)

    def to_data(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return str(self.poly.as_expr()) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"ZPoly({list(self.coeffs)})"


def _lift(value: Union[ZPoly, int]) -> ZPoly:
    return value if isinstance(value, ZPoly) else ZPoly([value])


def exact_divide(num: ZPoly, den: ZPoly) -> ZPoly:
    """Return q with num = den * q in Z[t].

    Raises DivisibilityError when den does not divide num over Z[t].
    """
    if den.is_zero:
        raise PreconditionError("division by the zero polynomial")
    quotient, remainder = num.poly.to_field().div(den.poly.to_field())
    if not remainder.is_zero:
        raise DivisibilityError(f"{den} does not divide {num} in Z[t]")
    if any(Rational(c).q != 1 for c in quotient.coeffs()):
        raise DivisibilityError(f"{num} / {den} has non-integral coefficients")
    return ZPoly.from_poly(quotient.set_domain(ZZ))


class QFraction:
    """A reduced quotient of integer polynomials, an element of Q(t).

    The denominator has positive leading coefficient; it is 1 exactly when
    the value lies in Z[t].
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ZPoly, den: ZPoly):
        if den.is_zero:
            raise PreconditionError("zero denominator")
        g = num.poly.gcd(den.poly)
        top, bottom = num.poly.exquo(g), den.poly.exquo(g)
        if bottom.LC() < 0:
            top, bottom = -top, -bottom
        self.num = ZPoly.from_poly(top)
        self.den = ZPoly.from_poly(bottom)

    @property
    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_rational_poly(self) -> Poly:
        """The value as a polynomial over Q when the denominator is a constant."""
        if self.den.degree > 0:
            raise DivisibilityError(f"{self} is not a polynomial")
        return Poly(list(reversed(self.num.coeffs)) or [0], T, domain=QQ) * Rational(1, self.den.coeffs[0])

    def specialize(self, ring: RingDescriptor) -> RingElem:
        """Evaluate at t = q; the denominator must become a unit of R."""
        inverse = self.den.specialize(ring).try_invert()
        if inverse is None:
            raise PreconditionError(f"denominator {self.den} is not invertible in {ring}")
        return self.num.specialize(ring) * inverse

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_data(self) -> dict:
        return {"num": self.num.to_data(), "den": self.den.to_data()}

    def __str__(self) -> str:
        return str(self.num) if self.is_polynomial else f"({self.num})/({self.den})"


def product(factors: Sequence[ZPoly]) -> ZPoly:
    result = ZPoly([1])
    for f in factors:
        result = result * f
    return result
