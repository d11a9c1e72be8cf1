"""The level-0 Taylor map and the statements around it."""

from typing import List

from ..errors import PreconditionError
from ..rings import RingElem, is_q_divisible, linalg, q_char, q_factorial
from ..twisted import AElem, TwistedAlgebra, twisted_power
from .pmap import mod_xi_reduce
from .ring import DividedPowerRing, DPElem, dp_from_poly


def taylor0(z: AElem, trunc: int) -> DPElem:
    """Theta(z) = sum_k d^k(z) xi^[k] up to xi^[trunc]."""
    coeffs = []
    current = z
    for _ in range(trunc + 1):
        coeffs.append(current)
        if current.is_zero:
            break
        current = current.derive()
    return DPElem(DividedPowerRing.standard(z.algebra), trunc, coeffs)


def is_taylor_constant(z: AElem, trunc: int) -> bool:
    """Whether Theta(z) is the constant series z."""
    return taylor0(z, trunc) == DPElem.scalar(DividedPowerRing.standard(z.algebra), z, trunc)


def horizontal_sections(algebra: TwistedAlgebra, degree: int) -> List[AElem]:
    """A basis of {z : d(z) = 0} among polynomials of x-degree at most ``degree``."""
    ring = algebra.ring
    zero, one = RingElem.integer(ring, 0), RingElem.integer(ring, 1)
    columns = [AElem.monomial(algebra, m).derive() for m in range(degree + 1)]
    rows = [[col.coefficient(j) for col in columns] for j in range(degree + 1)]
    vectors = linalg.kernel(rows, degree + 1, ring.is_field, zero, one)
    return [AElem.from_coeffs(algebra, dict(enumerate(v))) for v in vectors]


def taylor_reduces_to_identity(z: AElem, trunc: int) -> bool:
    """Both A-structures on A<xi>/(xi) agree on z: Theta(z) reduces to z."""
    alg = z.algebra
    p = q_char(alg.ring)
    reduced = mod_xi_reduce(taylor0(z, trunc))
    return reduced == DPElem.scalar(DividedPowerRing.omega(alg, p), z, reduced.trunc)


def truncated_taylor_bijective(algebra: TwistedAlgebra) -> bool:
    """A[xi]/xi^(p) -> A<xi>/I^[p] is bijective at q-characteristic p.

    xi^(k) goes to (k)_q! xi^[k]; the map is an isomorphism exactly when
    those factors are units for k < p, and xi^(p) itself must map to zero.
    """
    p = q_char(algebra.ring)
    if p == 0 or not is_q_divisible(algebra.ring):
        raise PreconditionError(f"{algebra.ring} must be q-divisible of positive q-characteristic")
    if not dp_from_poly(twisted_power(algebra, p), p).is_zero:
        return False
    return all(q_factorial(algebra.q, k).is_unit() for k in range(p))
