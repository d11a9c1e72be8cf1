"""A[xi] with sigma(xi) = xi + y, twisted powers and the infinite-level principal parts.

Through the substitution xi = x~ - x, the same ring stands for A (x)_R A.
"""

from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple, Union

from ..errors import DescriptorMismatchError, PreconditionError
from ..rings import RingElem, q_binomial, q_factorial, q_int
from .algebra import AElem, TwistedAlgebra

Coefficient = Union[AElem, RingElem, int]


class XiPoly:
    """sum_k c_k xi^k in the monomial basis, trailing zeros stripped."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: TwistedAlgebra, coeffs: Sequence[Coefficient] = ()):
        values = [c if isinstance(c, AElem) else AElem.scalar(algebra, c) for c in coeffs]
        while values and values[-1].is_zero:
            values.pop()
        self.algebra = algebra
        self.coeffs: Tuple[AElem, ...] = tuple(values)

    @classmethod
    def xi(cls, algebra: TwistedAlgebra) -> "XiPoly":
        return cls(algebra, [0, 1])

    @classmethod
    def constant(cls, algebra: TwistedAlgebra, c: Coefficient) -> "XiPoly":
        return cls(algebra, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> AElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.algebra.zero()

    def _check(self, other: "XiPoly") -> None:
        if other.algebra != self.algebra:
            raise DescriptorMismatchError(f"cannot combine A[xi] over {self.algebra} and {other.algebra}")

    def __add__(self, other: "XiPoly") -> "XiPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XiPoly(self.algebra, [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __sub__(self, other: "XiPoly") -> "XiPoly":
        return self + (-other)

    def __neg__(self) -> "XiPoly":
        return XiPoly(self.algebra, [-c for c in self.coeffs])

    def __mul__(self, other: Union["XiPoly", Coefficient]) -> "XiPoly":
        if not isinstance(other, XiPoly):
            return XiPoly(self.algebra, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return XiPoly(self.algebra)
        out = [self.algebra.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return XiPoly(self.algebra, out)

    def __rmul__(self, other: Coefficient) -> "XiPoly":
        return self * other

    def __pow__(self, n: int) -> "XiPoly":
        result = XiPoly.constant(self.algebra, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XiPoly):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.algebra, self.coeffs))

    def sigma(self, n: int = 1) -> "XiPoly":
        """sigma^n: coefficients by sigma_A, xi -> xi + (n)_q y."""
        if n == 0:
            return self
        alg = self.algebra
        shifted_xi = XiPoly(alg, [alg.y * q_int(alg.q, n), 1])
        result = XiPoly(alg)
        power = XiPoly.constant(alg, 1)
        for c in self.coeffs:
            result = result + power * c.sigma(n)
            power = power * shifted_xi
        return result

    def to_data(self) -> list:
        return [c.to_data() for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"({c})*xi^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero)

    def __repr__(self) -> str:
        return f"XiPoly({self.algebra}, {self})"


@lru_cache(maxsize=None)
def twisted_power(algebra: TwistedAlgebra, n: int) -> XiPoly:
    """xi^(n) = prod_{i<n} (xi + (i)_q y)."""
    if n < 0:
        raise PreconditionError(f"twisted power of negative order {n}")
    if n == 0:
        return XiPoly.constant(algebra, 1)
    factor = XiPoly(algebra, [algebra.y * q_int(algebra.q, n - 1), 1])
    return twisted_power(algebra, n - 1) * factor


def to_twisted_basis(f: XiPoly) -> List[AElem]:
    """Coefficients c_i with f = sum c_i xi^(i); the change of basis is unitriangular."""
    rest = f
    out = [f.algebra.zero()] * (f.degree + 1)
    for d in range(f.degree, -1, -1):
        c = rest.coefficient(d)
        if c.is_zero:
            continue
        out[d] = c
        rest = rest - twisted_power(f.algebra, d) * c
    return out


def from_twisted_basis(algebra: TwistedAlgebra, coeffs: Sequence[Coefficient]) -> XiPoly:
    result = XiPoly(algebra)
    for i, c in enumerate(coeffs):
        result = result + twisted_power(algebra, i) * c
    return result


def twisted_mul_in_twisted_basis(algebra: TwistedAlgebra, m: int, n: int) -> List[AElem]:
    """Coefficients of xi^(m) xi^(n) in the twisted basis, by the closed product rule."""
    q, y = algebra.q, algebra.y
    out = [algebra.zero()] * (m + n + 1)
    for i in range(min(m, n) + 1):
        scalar = (
            q_factorial(q, i) * q ** (i * (i - 1) // 2) * q_binomial(q, m, i) * q_binomial(q, n, i)
        )
        out[m + n - i] = y ** i * (scalar if i % 2 == 0 else -scalar)
    return out


@lru_cache(maxsize=None)
def x_plus_xi_power(algebra: TwistedAlgebra, m: int) -> XiPoly:
    """(x + xi)^m in the monomial basis."""
    if m == 0:
        return XiPoly.constant(algebra, 1)
    return x_plus_xi_power(algebra, m - 1) * XiPoly(algebra, [algebra.x, 1])


def substitute_x_plus_xi(z: AElem) -> XiPoly:
    """z(x + xi); needs z polynomial in x."""
    if z.low_degree < 0:
        raise PreconditionError(f"{z} has a pole at 0; use the level-0 Taylor map for Laurent elements")
    result = XiPoly(z.algebra)
    for m, c in z.terms().items():
        result = result + x_plus_xi_power(z.algebra, m) * AElem.scalar(z.algebra, c)
    return result


class PInfQuotient:
    """A[xi] / xi^(n+1): elements are twisted-basis coefficient lists of length n + 1."""

    def __init__(self, algebra: TwistedAlgebra, order: int):
        if order < 0:
            raise PreconditionError("quotient order must be nonnegative")
        self.algebra = algebra
        self.order = order

    def reduce(self, f: XiPoly) -> List[AElem]:
        coeffs = to_twisted_basis(f)[: self.order + 1]
        return coeffs + [self.algebra.zero()] * (self.order + 1 - len(coeffs))

    def lift(self, coeffs: Sequence[AElem]) -> XiPoly:
        return from_twisted_basis(self.algebra, coeffs)

    def multiply(self, a: Sequence[AElem], b: Sequence[AElem]) -> List[AElem]:
        return self.reduce(self.lift(a) * self.lift(b))

    def taylor(self, z: AElem) -> List[AElem]:
        """The infinite-level Taylor map z -> z(x + xi)."""
        return self.reduce(substitute_x_plus_xi(z))

    def __repr__(self) -> str:
        return f"PInfQuotient({self.algebra}, {self.order})"


def _rising(y: AElem, k: int) -> List[AElem]:
    """Coefficients of prod_{j<k} (w + j y) in w."""
    alg = y.algebra
    coeffs = [alg.one()]
    for j in range(k):
        shifted = [alg.zero()] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] = shifted[i] + c * y * j
        coeffs = shifted
    return coeffs


def q1_comul_check(n: int, y: AElem) -> bool:
    """Check the q = 1 comultiplication rule for w^(n) = prod_{i<n} (w + i y).

    Expands delta(w^(n)) with delta(w) = w (x) 1 + 1 (x) w in two commuting
    variables and compares with sum_i binom(n, i) w^(n-i) (x) w^(i).
    """
    alg = y.algebra
    lhs: Dict[Tuple[int, int], AElem] = {(0, 0): alg.one()}
    for i in range(n):
        step: Dict[Tuple[int, int], AElem] = {}
        for (a, b), c in lhs.items():
            for key, value in (((a + 1, b), c), ((a, b + 1), c), ((a, b), c * y * i)):
                step[key] = step.get(key, alg.zero()) + value
        lhs = step
    rhs: Dict[Tuple[int, int], AElem] = {}
    for i in range(n + 1):
        left, right = _rising(y, n - i), _rising(y, i)
        for a, ca in enumerate(left):
            for b, cb in enumerate(right):
                rhs[(a, b)] = rhs.get((a, b), alg.zero()) + ca * cb * comb(n, i)
    keys = set(lhs) | set(rhs)
    zero = alg.zero()
    return all(lhs.get(k, zero) == rhs.get(k, zero) for k in keys)
