"""The map Phi dual to the divided Frobenius, and the Azumaya action it induces.

Phi(z d^n) = z sum_k B_{k,n}(q) x^(pk-n) d^(pk). Its image lies in A[d^p],
which is also the module ZA on which D acts through
op . (z d^(pi)) = Phi(op o z) d^(pi).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from ..divided import dp_comul, tensor
from ..errors import DescriptorMismatchError, PreconditionError
from ..frobenius import FrobeniusContext
from ..rings import RingElem, is_q_divisible, linalg
from ..twisted import PInfQuotient, TwistedAlgebra, x_plus_xi_power
from ..weyl import WeylElem

logger = logging.getLogger(__name__)


class PhiContext:
    """A Frobenius context that is q-divisible with q-characteristic p and h = 0."""

    def __init__(self, algebra: TwistedAlgebra):
        if not is_q_divisible(algebra.ring):
            raise PreconditionError(f"{algebra.ring} is not q-divisible")
        self.frobenius = FrobeniusContext(algebra)
        if not self.frobenius.is_adapted(2 * self.frobenius.p):
            raise PreconditionError(f"F* is not adapted to sigma on {algebra}")
        self.algebra = algebra
        self.p = self.frobenius.p

    def __repr__(self) -> str:
        return f"PhiContext({self.algebra}, p={self.p})"

    def phi_d_power(self, n: int) -> WeylElem:
        """Phi(d^n)."""
        return _phi_d_power(self, n)

    def phi(self, op: WeylElem) -> WeylElem:
        """The A-linear extension of d^n -> Phi(d^n)."""
        if op.algebra != self.algebra:
            raise DescriptorMismatchError(f"expected an operator over {self.algebra}")
        result = WeylElem(self.algebra)
        for n, z in enumerate(op.coeffs):
            if not z.is_zero:
                result = result + z * self.phi_d_power(n)
        return result

    def duality_crosscheck_holds(self, n: int) -> bool:
        """The d^(kp) coefficient of Phi(d^n) is the xi^[n] coefficient of [F*](omega^[k])."""
        image = self.phi_d_power(n)
        for k in range(n + 1):
            expected = self.frobenius.basis_image(k, max(n, self.p * k)).coefficient(n)
            if image.coefficient(self.p * k) != expected:
                return False
        return True

    def nonhom_witness(self) -> Tuple[WeylElem, WeylElem]:
        """(Phi(d o d), Phi(d) o Phi(d)); the two differ."""
        d = WeylElem.d(self.algebra)
        image = self.phi(d)
        return self.phi(d * d), image * image

    def comul_commutes_with_frobenius(self, n: int) -> bool:
        """delta([F*](omega^[n])) = sum_i [F*](omega^[n-i]) (x) [F*](omega^[i])."""
        N = self.p * n
        image = self.frobenius.basis_image
        lhs = dp_comul(image(n, N))
        rhs = tensor(image(n, N), image(0, N))
        for i in range(1, n + 1):
            rhs = rhs + tensor(image(n - i, N), image(i, N))
        return lhs == rhs

    def tensor_over_source_is_truncation(self) -> bool:
        """A (x)_{A'} A -> A[xi]/xi^(p) is an isomorphism.

        1 (x) x^j maps to (x + xi)^j; the matrix of these images in the
        twisted basis must be invertible, and 1 (x) x^p must land on x^p.
        """
        alg, p = self.algebra, self.p
        quotient = PInfQuotient(alg, p - 1)
        rows = [quotient.reduce(x_plus_xi_power(alg, j)) for j in range(p)]
        det = linalg.determinant(rows, alg.zero(), alg.one())
        if det.try_invert() is None:
            return False
        balanced = quotient.reduce(x_plus_xi_power(alg, p))
        return balanced[0] == alg.x ** p and all(c.is_zero for c in balanced[1:])


@lru_cache(maxsize=None)
def _phi_d_power(ctx: PhiContext, n: int) -> WeylElem:
    p, alg = ctx.p, ctx.algebra
    coeffs = [alg.zero()] * (p * n + 1)
    for k in range(-(-n // p), n + 1):
        b = ctx.frobenius.b(k, n)
        if not b.is_zero:
            coeffs[p * k] = alg.x ** (p * k - n) * b
    return WeylElem(alg, coeffs)


@dataclass(frozen=True)
class CentralPoly:
    """sum c_ab X^a D^b in R[X, D] with X = x^p, D = d^p, truncated at D^trunc."""

    trunc: int
    terms: Dict[Tuple[int, int], RingElem] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {k: c for k, c in self.terms.items() if k[1] <= self.trunc and not c.is_zero}
        object.__setattr__(self, "terms", cleaned)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CentralPoly") -> "CentralPoly":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return CentralPoly(min(self.trunc, other.trunc), terms)

    def __mul__(self, other: "CentralPoly") -> "CentralPoly":
        trunc = min(self.trunc, other.trunc)
        terms: Dict[Tuple[int, int], RingElem] = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                if b + b2 > trunc:
                    continue
                key = (a + a2, b + b2)
                terms[key] = terms[key] + c * c2 if key in terms else c * c2
        return CentralPoly(trunc, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CentralPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def to_data(self) -> list:
        return [[a, b, c.to_data()] for (a, b), c in sorted(self.terms.items())]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "*".join(m for m in (f"X^{a}" if a else "", f"D^{b}" if b else "") if m)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


AzumayaMatrix = List[List[CentralPoly]]


def azumaya_matrix(ctx: PhiContext, op: WeylElem, trunc: int) -> AzumayaMatrix:
    """Matrix of op on ZA in the basis 1, x, ..., x^(p-1) over Z, truncated at D^trunc."""
    if trunc < 0:
        raise PreconditionError(f"truncation must be nonnegative, got {trunc}")
    p, alg = ctx.p, ctx.algebra
    matrix = [[CentralPoly(trunc) for _ in range(p)] for _ in range(p)]
    for j in range(p):
        image = ctx.phi(op * WeylElem.monomial(alg, j, 0))
        for (m, k), c in image.terms().items():
            if k % p:
                raise PreconditionError(f"Phi produced d^{k}, which is not a power of d^{p}")
            a, row = divmod(m, p)
            matrix[row][j] = matrix[row][j] + CentralPoly(trunc, {(a, k // p): c})
    return matrix


def azumaya_product(a: AzumayaMatrix, b: AzumayaMatrix) -> AzumayaMatrix:
    trunc = min(a[0][0].trunc, b[0][0].trunc)
    n = len(a)
    out = [[CentralPoly(trunc) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def azumaya_action_holds(ctx: PhiContext, a: WeylElem, b: WeylElem, trunc: int) -> bool:
    """The matrix of a o b is the product of the matrices of a and b."""
    lhs = azumaya_matrix(ctx, a * b, trunc)
    rhs = azumaya_product(azumaya_matrix(ctx, a, trunc), azumaya_matrix(ctx, b, trunc))
    same = lhs == rhs
    if not same:
        logger.debug("Azumaya action fails on %s, %s", a, b)
    return same
