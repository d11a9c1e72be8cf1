"""Composition of operators read as A-linear functionals on divided powers.

An operator sum z_k d^k is the functional xi^[k] -> z_k. Composition goes
through delta: (a o b)(w) = a((1 (x) b) delta(w)), where b on the right
factor lands in the left one through the Taylor map.
"""

from ..divided import DividedPowerRing, DPElem, ThetaPoly, dp_comul, pairing, taylor0
from ..errors import TruncationError
from .operators import WeylElem


def as_functional(op: WeylElem) -> ThetaPoly:
    return ThetaPoly(op.algebra, op.coeffs)


def weyl_mul_via_duality(a: WeylElem, b: WeylElem, trunc: int) -> WeylElem:
    a._check(b)
    alg = a.algebra
    top = a.degree + b.degree
    if top > trunc:
        raise TruncationError(f"composing operators of orders {a.degree} and {b.degree} needs precision {top}, got {trunc}")
    if a.is_zero or b.is_zero:
        return WeylElem(alg)
    ring = DividedPowerRing.standard(alg)
    functional = as_functional(a)
    thetas = {i: taylor0(c, trunc) for i, c in enumerate(b.coeffs) if not c.is_zero}
    out = []
    for k in range(top + 1):
        image = DPElem(ring, trunc)
        for (j, i), c in dp_comul(ring.basis(k, trunc)).table.items():
            if i in thetas:
                image = image + ring.basis(j, trunc) * thetas[i] * c
        out.append(pairing(functional, image))
    return WeylElem(alg, out)
