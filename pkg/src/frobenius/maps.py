"""The p-Frobenius F*: A' -> A, its action on A[xi] and the divided p-Frobenius map.

A' is the algebra in x' with sigma(x') = q^p x'. F* sends x' to x^p and is
R-linear; ``frobenius_on_A`` additionally twists coefficients by F*_R.
The divided Frobenius starts from A'<omega>_{q^p, (1-q)x'}, whose image of
(1-q)x' is (1-q)x^p.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..divided import DividedPowerRing, DPElem, dp_from_poly, dp_mul
from ..errors import DescriptorMismatchError, PreconditionError, TruncationError
from ..rings import RingElem, is_q_divisible, q_char, q_factorial, q_int
from ..twisted import AElem, TwistedAlgebra, XiPoly, from_twisted_basis, twisted_power, x_plus_xi_power
from .coefficients import coeff_A, coeff_B

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _specialized(family: str, n: int, i: int, p: int, ring) -> RingElem:
    value = coeff_A(n, i, p) if family == "A" else coeff_B(n, i, p)
    return value.specialize(ring)


class FrobeniusContext:
    """F*: A' -> A for a fixed p, with the rings on both sides of [F*]."""

    def __init__(self, algebra: TwistedAlgebra, p: Optional[int] = None):
        if algebra.has_h:
            raise PreconditionError("the Frobenius needs sigma(x) = q x, that is h = 0")
        char = q_char(algebra.ring)
        if p is None:
            if char == 0:
                raise PreconditionError(f"{algebra.ring} has q-characteristic 0; pass p explicitly")
            p = char
        if p < 2:
            raise PreconditionError(f"p must be at least 2, got {p}")
        if char and p != char:
            raise PreconditionError(f"p={p} differs from the q-characteristic {char} of {algebra.ring}")
        self.algebra = algebra
        self.p = p
        self.source_algebra = TwistedAlgebra(
            ring=algebra.ring, variant=algebra.variant, variable="x'", q_exponent=p
        )
        q = algebra.q
        self.source_ring = DividedPowerRing(
            self.source_algebra, q ** p, self.source_algebra.x * (1 - q), "omega"
        )
        self.linearized_ring = DividedPowerRing(algebra, q ** p, AElem.monomial(algebra, p, 1 - q), "omega")
        self.target_ring = DividedPowerRing.standard(algebra)

    def __repr__(self) -> str:
        return f"FrobeniusContext({self.algebra}, p={self.p})"

    # -- on functions ------------------------------------------------

    def frobenius_linear(self, z: AElem) -> AElem:
        """R-linear x' -> x^p."""
        self._check_source(z)
        return AElem.from_coeffs(self.algebra, {self.p * m: c for m, c in z.terms().items()})

    def frobenius_on_A(self, z: AElem) -> AElem:
        """F*_R on coefficients, x' -> x^p."""
        self._check_source(z)
        return AElem.from_coeffs(self.algebra, {self.p * m: c.frobenius(self.p) for m, c in z.terms().items()})

    def _check_source(self, z: AElem) -> None:
        if z.algebra != self.source_algebra:
            raise DescriptorMismatchError(f"expected an element of {self.source_algebra}, got {z.algebra}")

    def source_x(self) -> AElem:
        return self.source_algebra.x

    def is_adapted(self, max_power: int) -> bool:
        """F*(x'^k) = x^(pk) is horizontal for every k <= max_power."""
        return all(
            self.frobenius_linear(AElem.monomial(self.source_algebra, k)).derive().is_zero
            for k in range(max_power + 1)
        )

    # -- on A[xi] ------------------------------------------------------

    def xi_image(self) -> XiPoly:
        """(x + xi)^p - x^p."""
        alg = self.algebra
        return x_plus_xi_power(alg, self.p) - XiPoly.constant(alg, AElem.monomial(alg, self.p))

    def frobenius_on_xi(self, f: XiPoly) -> XiPoly:
        """F*-linear ring map A'[xi] -> A[xi] with xi -> (x + xi)^p - x^p."""
        if f.algebra != self.source_algebra:
            raise DescriptorMismatchError(f"expected a polynomial over {self.source_algebra}")
        image = self.xi_image()
        result = XiPoly(self.algebra)
        power = XiPoly.constant(self.algebra, 1)
        for k, c in enumerate(f.coeffs):
            if k:
                power = power * image
            if not c.is_zero:
                result = result + power * self.frobenius_linear(c)
        return result

    def twisted_power_coefficients(self, n: int) -> List[AElem]:
        """A_{n,i}(q) x^(pn-i) for i <= pn: the twisted-basis coefficients of F*(xi'^(n))."""
        p, ring = self.p, self.algebra.ring
        return [AElem.monomial(self.algebra, p * n - i, _specialized("A", n, i, p, ring)) for i in range(p * n + 1)]

    def frobenius_twisted_power(self, n: int, trunc: Optional[int] = None) -> Tuple[XiPoly, DPElem]:
        """F*(xi'^(n)) in A[xi] and its image in A<xi>."""
        coeffs = self.twisted_power_coefficients(n)
        poly = from_twisted_basis(self.algebra, coeffs)
        N = self.p * n if trunc is None else trunc
        return poly, dp_from_poly(poly, N)

    def twisted_power_oracle(self, n: int) -> XiPoly:
        """prod_{i<n} ((x + xi)^p - q^(pi) x^p), expanded."""
        alg = self.algebra
        result = XiPoly.constant(alg, 1)
        for i in range(n):
            shift = AElem.monomial(alg, self.p, alg.q ** (self.p * i))
            result = result * (x_plus_xi_power(alg, self.p) - XiPoly.constant(alg, shift))
        return result

    def source_twisted_power(self, n: int) -> XiPoly:
        """xi'^(n) over A', that is prod_{i<n} (xi + (1 - q^(pi)) x')."""
        return twisted_power(self.source_algebra, n)

    # -- divided Frobenius -----------------------------------------------

    def b(self, n: int, i: int) -> RingElem:
        return _specialized("B", n, i, self.p, self.algebra.ring)

    def basis_image(self, n: int, trunc: int) -> DPElem:
        """[F*](omega^[n]) = sum_{n <= i <= pn} B_{n,i}(q) x^(pn-i) xi^[i]."""
        return _basis_image(self, n, trunc)

    def divided_frobenius(self, w: DPElem, trunc: Optional[int] = None) -> DPElem:
        """The F*-linear map A'<omega> -> A<xi>; also accepts the A-linear extension's source.

        Images of omega^[n] occupy indices n..pn, so the result is exact when
        the target precision is at most the source one or at least p times it.
        """
        if w.ring == self.source_ring:
            lift = self.frobenius_linear
        elif w.ring == self.linearized_ring:
            lift = None
        else:
            raise DescriptorMismatchError(f"divided Frobenius expects {self.source_ring} or {self.linearized_ring}")
        N = self.p * w.trunc if trunc is None else trunc
        if w.trunc < N < self.p * w.trunc:
            raise TruncationError(
                f"target precision {N} lies strictly between {w.trunc} and {self.p * w.trunc}"
            )
        out = DPElem(self.target_ring, N)
        for n in w.support():
            if n > N:
                continue
            c = w.coeffs[n] if lift is None else lift(w.coeffs[n])
            out = out + self.basis_image(n, N) * c
        return out

    def subs_holds(self, n: int) -> bool:
        """(n)_{q^p}! (p)_q^n [F*](omega^[n]) is the image of F*(xi'^(n)) in A<xi>."""
        q = self.algebra.q
        N = self.p * n
        scale = q_factorial(q ** self.p, n) * q_int(q, self.p) ** n
        image = dp_from_poly(self.frobenius_on_xi(self.source_twisted_power(n)), N)
        return self.basis_image(n, N) * scale == image

    def multiplicative_on(self, m: int, n: int) -> bool:
        N = m + n
        src = self.source_ring
        lhs = self.divided_frobenius(dp_mul(src.basis(m, N), src.basis(n, N)), self.p * N)
        rhs = dp_mul(
            self.divided_frobenius(src.basis(m, N), self.p * N),
            self.divided_frobenius(src.basis(n, N), self.p * N),
        )
        return lhs == rhs


@lru_cache(maxsize=None)
def _basis_image(ctx: FrobeniusContext, n: int, trunc: int) -> DPElem:
    p = ctx.p
    coeffs = [ctx.algebra.zero()] * (trunc + 1)
    for i in range(n, min(p * n, trunc) + 1):
        coeffs[i] = AElem.monomial(ctx.algebra, p * n - i, ctx.b(n, i))
    return DPElem(ctx.target_ring, trunc, coeffs)


class MixedElem:
    """sum c_{k,n} xibar^[k] omega^[n] with k < p, in (A[xi]/xi^(p))<omega>_{1, (1-q)x^p}."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Dict[Tuple[int, int], AElem]):
        for k, _ in terms:
            if not 0 <= k < p:
                raise PreconditionError(f"xibar index {k} must lie in [0, {p})")
        self.p = p
        self.terms = {key: c for key, c in terms.items() if not c.is_zero}

    @classmethod
    def basis(cls, algebra: TwistedAlgebra, p: int, k: int, n: int) -> "MixedElem":
        return cls(p, {(k, n): algebra.one()})

    def degree(self) -> int:
        """Largest k + pn among the terms, -1 for zero."""
        return max((k + self.p * n for k, n in self.terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedElem):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*xibar^[{k}]omega^[{n}]" for (k, n), c in sorted(self.terms.items()))
        return f"MixedElem({body or '0'})"


def _require_positive_char(ctx: FrobeniusContext) -> None:
    if q_char(ctx.algebra.ring) == 0:
        raise PreconditionError(f"{ctx.algebra.ring} has q-characteristic 0; the mixed ring needs q^p = 1")


def mixed_to_divided(ctx: FrobeniusContext, m: MixedElem, trunc: Optional[int] = None) -> DPElem:
    """xibar^[k] omega^[n] -> xi^[k] [F*](omega^[n])."""
    _require_positive_char(ctx)
    N = max(m.degree(), 0) if trunc is None else trunc
    if m.degree() > N:
        raise TruncationError(f"mixed element of degree {m.degree()} exceeds precision {N}")
    target = ctx.target_ring
    out = DPElem(target, N)
    for (k, n), c in m.terms.items():
        out = out + dp_mul(target.basis(k, N), ctx.basis_image(n, N)) * c
    return out


def divided_to_mixed(ctx: FrobeniusContext, a: DPElem) -> MixedElem:
    """Triangular solve against leading terms B_{n,pn}(q) xi^[pn+k]."""
    _require_positive_char(ctx)
    ring = ctx.algebra.ring
    if not is_q_divisible(ring):
        raise PreconditionError(f"{ring} is not q-divisible; the mixed map need not be invertible")
    if a.ring != ctx.target_ring:
        raise DescriptorMismatchError(f"expected an element of {ctx.target_ring}")
    p, N = ctx.p, a.trunc
    rest = a
    terms: Dict[Tuple[int, int], AElem] = {}
    for d in range(N, -1, -1):
        c = rest.coeffs[d]
        if c.is_zero:
            continue
        n, k = divmod(d, p)
        lead = ctx.b(n, p * n).try_invert()
        if lead is None:
            raise PreconditionError(f"B_({n},{p * n})(q) is not a unit of {ring}")
        coefficient = c * lead
        terms[(k, n)] = coefficient
        rest = rest - mixed_to_divided(ctx, MixedElem(p, {(k, n): coefficient}), N)
    logger.debug("mixed preimage found with %d terms", len(terms))
    return MixedElem(p, terms)


def preserves_filtration(ctx: FrobeniusContext, k: int, n: int, trunc: int) -> bool:
    """The image of xibar^[k] omega^[n] has no component below xi^[n]."""
    image = mixed_to_divided(ctx, MixedElem.basis(ctx.algebra, ctx.p, k, n), trunc)
    return all(c.is_zero for c in image.coeffs[: min(n, trunc + 1)])
