"""The p-curvature map theta -> d^p and brute-force centralizer and center computations."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..divided import ThetaPoly
from ..errors import PreconditionError
from ..rings import RingElem, is_q_divisible, linalg, q_char
from ..twisted import TwistedAlgebra
from .operators import WeylElem, commutator

logger = logging.getLogger(__name__)

CurvaturePoly = ThetaPoly


def _require_divisible(algebra: TwistedAlgebra) -> int:
    p = q_char(algebra.ring)
    if p == 0 or not is_q_divisible(algebra.ring):
        raise PreconditionError(f"{algebra.ring} must be q-divisible of positive q-characteristic")
    return p


def p_curvature(f: CurvaturePoly) -> WeylElem:
    """sum f_k theta^k -> sum f_k d^(pk)."""
    p = _require_divisible(f.algebra)
    coeffs = [f.algebra.zero()] * (p * f.degree + 1) if not f.is_zero else []
    for k, c in enumerate(f.coeffs):
        coeffs[p * k] = c
    return WeylElem(f.algebra, coeffs)


def _box(degree: int) -> List[Tuple[int, int]]:
    return [(a, k) for k in range(degree + 1) for a in range(degree + 1)]


def weyl_vector(op: WeylElem, coords: Sequence[Tuple[int, int]]) -> List[RingElem]:
    terms = op.terms()
    zero = RingElem.integer(op.algebra.ring, 0)
    return [terms.get(c, zero) for c in coords]


def _coordinates(images: Sequence[WeylElem]) -> List[Tuple[int, int]]:
    keys = set()
    for op in images:
        keys.update(op.terms())
    return sorted(keys)


def _blocks(algebra: TwistedAlgebra, degree: int) -> List[List[Tuple[int, int]]]:
    """Monomial blocks preserved by both commutators; with h = 0 the weight a - k is preserved."""
    box = _box(degree)
    if algebra.has_h:
        return [box]
    grouped: Dict[int, List[Tuple[int, int]]] = {}
    for a, k in box:
        grouped.setdefault(a - k, []).append((a, k))
    return [grouped[w] for w in sorted(grouped)]


def _kernel_ops(algebra: TwistedAlgebra, degree: int, probes: Sequence[WeylElem]) -> List[WeylElem]:
    ring = algebra.ring
    zero, one = RingElem.integer(ring, 0), RingElem.integer(ring, 1)
    found: List[WeylElem] = []
    for block in _blocks(algebra, degree):
        monomials = [WeylElem.monomial(algebra, a, k) for a, k in block]
        rows: List[List[RingElem]] = []
        for probe in probes:
            images = [commutator(m, probe) for m in monomials]
            coords = _coordinates(images)
            columns = [weyl_vector(img, coords) for img in images]
            rows.extend([col[r] for col in columns] for r in range(len(coords)))
        vectors = linalg.kernel(rows, len(block), ring.is_field, zero, one)
        found.extend(WeylElem.from_terms(algebra, dict(zip(block, v))) for v in vectors)
    logger.debug("commutator kernel in degree box %d has dimension %d", degree, len(found))
    return found


def centralizer_basis(algebra: TwistedAlgebra, degree: int) -> List[WeylElem]:
    """Operators of x- and d-degree at most ``degree`` commuting with x."""
    return _kernel_ops(algebra, degree, [WeylElem.monomial(algebra, 1, 0)])


def center_basis(algebra: TwistedAlgebra, degree: int) -> List[WeylElem]:
    """Operators of x- and d-degree at most ``degree`` commuting with x and d."""
    _require_divisible(algebra)
    if algebra.has_h:
        raise PreconditionError("the center computation needs h = 0")
    return _kernel_ops(algebra, degree, [WeylElem.monomial(algebra, 1, 0), WeylElem.d(algebra)])


def expected_centralizer(algebra: TwistedAlgebra, degree: int) -> List[WeylElem]:
    """x^a d^(pb) inside the degree box; only x^a at q-characteristic 0."""
    p = q_char(algebra.ring)
    return [WeylElem.monomial(algebra, a, k) for a, k in _box(degree) if k == 0 or (p and k % p == 0)]


def expected_center(algebra: TwistedAlgebra, degree: int) -> List[WeylElem]:
    """x^(pa) d^(pb) inside the degree box."""
    p = _require_divisible(algebra)
    return [WeylElem.monomial(algebra, a, k) for a, k in _box(degree) if a % p == 0 and k % p == 0]


def _weight(op: WeylElem) -> Optional[int]:
    weights = {a - k for a, k in op.terms()}
    return weights.pop() if len(weights) == 1 else None


def _grouped(ops: Sequence[WeylElem]) -> Dict[Optional[int], List[WeylElem]]:
    """Operators grouped by weight a - k, or all under None when one of them mixes weights."""
    if any(op.algebra.has_h or _weight(op) is None for op in ops if not op.is_zero):
        return {None: list(ops)}
    grouped: Dict[Optional[int], List[WeylElem]] = {}
    for op in ops:
        if not op.is_zero:
            grouped.setdefault(_weight(op), []).append(op)
    return grouped


def spans_equal(a: Sequence[WeylElem], b: Sequence[WeylElem]) -> bool:
    """Equality of R-spans, over the fraction field when R is not a field."""
    ops = list(a) + list(b)
    if not ops:
        return True
    field = ops[0].algebra.ring.is_field
    left, right = _grouped(a), _grouped(b)
    if None in left or None in right:
        left, right = {None: list(a)}, {None: list(b)}
    for w in set(left) | set(right):
        group_a, group_b = left.get(w, []), right.get(w, [])
        coords = _coordinates(group_a + group_b)
        if not linalg.same_span(
            [weyl_vector(o, coords) for o in group_a], [weyl_vector(o, coords) for o in group_b], field
        ):
            return False
    return True


def spanned_by(a: Sequence[WeylElem], b: Sequence[WeylElem]) -> bool:
    """Whether every operator in ``a`` lies in the span of ``b``."""
    ops = list(a) + list(b)
    if not ops:
        return True
    coords = _coordinates(ops)
    field = ops[0].algebra.ring.is_field
    vectors = [weyl_vector(o, coords) for o in b]
    return all(linalg.in_span(vectors, weyl_vector(o, coords), field) for o in a)


def curvature_commutes_with_x(f: CurvaturePoly, max_power: int) -> bool:
    image = p_curvature(f)
    return all(commutator(image, WeylElem.monomial(f.algebra, a, 0)).is_zero for a in range(max_power + 1))
