"""Higgs modules over A', q-difference modules over A and the functors between them.

A q-difference module of rank r is stored through the matrix whose column j
is d(e_j); the rest of the action follows from the twisted Leibniz rule
d(z s) = d(z) s + sigma(z) d(s).

Going back from M to H uses the sections s with d^k(s) = Phi_k(s) for all k,
where Phi_k is Phi(d^k) with the central part untwisted: the center acts on
A (x)_{A'} H through Phi restricted to A[d^p], so that restriction is
inverted before comparing. The Higgs field is the untwisted d^p.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..config import get_settings
from ..errors import DescriptorMismatchError, InternalConsistencyError, PreconditionError, UnderSaturationError
from ..rings import RingElem, linalg, q_char
from ..twisted import AElem, TwistedAlgebra
from .phi import PhiContext

logger = logging.getLogger(__name__)

Vector = List[AElem]
Matrix = List[List[AElem]]


def _square(matrix: Sequence[Sequence[AElem]], algebra: TwistedAlgebra) -> Matrix:
    rows = [list(r) for r in matrix]
    if any(len(r) != len(rows) for r in rows):
        raise PreconditionError("module matrices must be square")
    for row in rows:
        for z in row:
            if z.algebra != algebra:
                raise DescriptorMismatchError(f"matrix entry over {z.algebra}, expected {algebra}")
    return rows


@dataclass
class HiggsModule:
    """A free A'-module of rank r with the endomorphism theta (column j = theta(h_j))."""

    algebra: TwistedAlgebra
    theta: Matrix

    def __post_init__(self):
        self.theta = _square(self.theta, self.algebra)

    @property
    def rank(self) -> int:
        return len(self.theta)

    def to_data(self) -> dict:
        return {"rank": self.rank, "theta": [[z.to_data() for z in row] for row in self.theta]}


@dataclass
class QDiffModule:
    """A free A-module of rank r with a sigma-derivation (column j = d(e_j))."""

    algebra: TwistedAlgebra
    derivation: Matrix

    def __post_init__(self):
        self.derivation = _square(self.derivation, self.algebra)

    @property
    def rank(self) -> int:
        return len(self.derivation)

    def basis_vector(self, j: int) -> Vector:
        alg = self.algebra
        return [alg.one() if i == j else alg.zero() for i in range(self.rank)]

    def apply_d(self, s: Sequence[AElem]) -> Vector:
        """d(sum z_j e_j) = sum d(z_j) e_j + sigma(z_j) d(e_j)."""
        shifted = [z.sigma(1) for z in s]
        out = []
        for i in range(self.rank):
            value = s[i].derive()
            for j, z in enumerate(shifted):
                entry = self.derivation[i][j]
                if not z.is_zero and not entry.is_zero:
                    value = value + entry * z
            out.append(value)
        return out

    def to_data(self) -> dict:
        return {"rank": self.rank, "derivation": [[z.to_data() for z in row] for row in self.derivation]}


def _is_zero_vector(s: Sequence[AElem]) -> bool:
    return all(z.is_zero for z in s)


def iterates(module: QDiffModule, s: Sequence[AElem], limit: int) -> Optional[List[Vector]]:
    """[s, d(s), d^2(s), ...] up to the last nonzero one, or None past ``limit`` steps."""
    out: List[Vector] = []
    current = list(s)
    while not _is_zero_vector(current):
        if len(out) >= limit:
            return None
        out.append(current)
        current = module.apply_d(current)
    return out


def nilpotency_index(module: QDiffModule, limit: Optional[int] = None) -> Optional[int]:
    """Least N with d^N(e_j) = 0 for every j, or None when it exceeds ``limit``."""
    limit = get_settings().nilpotency_limit if limit is None else limit
    index = 0
    for j in range(module.rank):
        chain = iterates(module, module.basis_vector(j), limit)
        if chain is None:
            return None
        index = max(index, len(chain))
    return index


Nilpotent = Union[HiggsModule, QDiffModule, Sequence[Sequence[AElem]]]


def is_quasi_nilpotent(target: Nilpotent, bound: int) -> bool:
    """Whether the bound-th iterate kills every generator.

    For a Higgs field or a bare matrix this is theta^bound = 0; for a
    q-difference module the iterate follows the twisted Leibniz rule.
    """
    if isinstance(target, QDiffModule):
        return all(iterates(target, target.basis_vector(j), bound) is not None for j in range(target.rank))
    matrix = target.theta if isinstance(target, HiggsModule) else [list(r) for r in target]
    if not matrix:
        return True
    alg = matrix[0][0].algebra
    return linalg.is_zero_matrix(linalg.mat_pow(matrix, bound, alg.zero(), alg.one()))


def higgs_to_qdiff(ctx: PhiContext, higgs: HiggsModule) -> QDiffModule:
    """A (x)_{A'} H with d(1 (x) h) = x^(p-1) (x) theta(h)."""
    source = ctx.frobenius.source_algebra
    if higgs.algebra != source:
        raise DescriptorMismatchError(f"Higgs module must live over {source}, got {higgs.algebra}")
    if not is_quasi_nilpotent(higgs, max(higgs.rank, 1)):
        raise PreconditionError("the Higgs field is not nilpotent")
    lead = ctx.algebra.x ** (ctx.p - 1)
    derivation = [[lead * ctx.frobenius.frobenius_linear(z) for z in row] for row in higgs.theta]
    return QDiffModule(ctx.algebra, derivation)


# -- back from q-difference modules ------------------------------------------


@lru_cache(maxsize=None)
def _untwist(ctx: PhiContext, top: int) -> Tuple[Tuple[AElem, ...], ...]:
    """b[l][m] with Phi|^(-1)(D^l) = sum_m b[l][m] D^m for l, m <= top, D = d^p.

    Phi(D^k) = sum_l B_{l,pk}(q) x^(p(l-k)) D^l starts at the unit B_{k,pk}(q) D^k,
    so the inverse is solved degree by degree.
    """
    p, alg = ctx.p, ctx.algebra
    frob = ctx.frobenius

    def forward(k: int, l: int) -> AElem:
        if not k <= l <= p * k:
            return alg.zero()
        return AElem.monomial(alg, p * (l - k), frob.b(l, p * k))

    inverse_lead = []
    for m in range(top + 1):
        inv = forward(m, m).try_invert()
        if inv is None:
            raise PreconditionError(f"B_({m},{p * m})(q) is not a unit; Phi does not untwist")
        inverse_lead.append(inv)
    table = []
    for l in range(top + 1):
        row = [alg.zero()] * (top + 1)
        row[l] = inverse_lead[l]
        for m in range(l + 1, top + 1):
            acc = alg.zero()
            for k in range(l, m):
                if not row[k].is_zero:
                    acc = acc + row[k] * forward(k, m)
            row[m] = -(acc * inverse_lead[m])
        table.append(tuple(row))
    return tuple(table)


def _untwisted_phi(ctx: PhiContext, k: int, top: int) -> List[AElem]:
    """Coefficients of D^m, m <= top, in the untwisted Phi(d^k)."""
    p, alg = ctx.p, ctx.algebra
    table = _untwist(ctx, top)
    out = [alg.zero()] * (top + 1)
    for l in range(-(-k // p), min(k, top) + 1):
        c = AElem.monomial(alg, p * l - k, ctx.frobenius.b(l, k))
        if c.is_zero:
            continue
        for m in range(l, top + 1):
            if not table[l][m].is_zero:
                out[m] = out[m] + c * table[l][m]
    return out


def _apply_central(coeffs: Sequence[AElem], chain: Sequence[Vector], p: int, rank: int, alg: TwistedAlgebra) -> Vector:
    """sum_m c_m d^(pm)(s), given the iterates of s."""
    out = [alg.zero()] * rank
    for m, c in enumerate(coeffs):
        if c.is_zero or p * m >= len(chain):
            continue
        out = [a + c * b for a, b in zip(out, chain[p * m])]
    return out


Unknown = Tuple[int, int]


def _section(coords: Sequence[RingElem], index: Sequence[Unknown], rank: int, alg: TwistedAlgebra) -> Vector:
    terms: List[Dict[int, RingElem]] = [{} for _ in range(rank)]
    for (a, j), c in zip(index, coords):
        if not c.is_zero:
            terms[j][a] = c
    return [AElem.from_coeffs(alg, t) for t in terms]


def _coords(s: Sequence[AElem], index: Sequence[Unknown]) -> List[RingElem]:
    return [s[j].coefficient(a) for a, j in index]


def phi_horizontal_sections(ctx: PhiContext, module: QDiffModule, degree: int) -> List[Vector]:
    """A'-generators of the sections of x-degree <= ``degree`` horizontal for the untwisted Phi.

    Generators are picked greedily by increasing degree; the A'-span of those
    already picked is compared over R inside the degree box.
    """
    alg, p, r = ctx.algebra, ctx.p, module.rank
    ring = alg.ring
    if not ring.is_field:
        raise PreconditionError(f"solving for horizontal sections needs a field of coefficients, got {ring}")
    if module.algebra != alg:
        raise DescriptorMismatchError(f"module lives over {module.algebra}, expected {alg}")
    limit = get_settings().nilpotency_limit
    N = nilpotency_index(module, limit)
    if N is None:
        raise PreconditionError(f"d is not quasi-nilpotent on the generators within {limit} steps")
    conditions = p * N + p
    index: List[Unknown] = [(a, j) for a in range(degree + 1) for j in range(r)]
    chains = []
    for a, j in index:
        start = [AElem.monomial(alg, a) if i == j else alg.zero() for i in range(r)]
        chain = iterates(module, start, limit + degree + 1)
        if chain is None:
            raise PreconditionError(f"d is not quasi-nilpotent on x^{a} e_{j}")
        chains.append(chain)
    longest = max(len(c) for c in chains)
    top = (longest - 1) // p

    zero, one = RingElem.integer(ring, 0), RingElem.integer(ring, 1)
    entries: Dict[Tuple[int, int, int], Dict[int, RingElem]] = {}
    for k in range(1, min(conditions, longest) + 1):
        central = _untwisted_phi(ctx, k, top)
        for col, chain in enumerate(chains):
            lhs = chain[k] if k < len(chain) else [alg.zero()] * r
            rhs = _apply_central(central, chain, p, r, alg)
            for i, (u, v) in enumerate(zip(lhs, rhs)):
                for m, c in (u - v).terms().items():
                    entries.setdefault((k, i, m), {})[col] = c
    rows = [[row.get(col, zero) for col in range(len(index))] for _, row in sorted(entries.items())]
    kernel = linalg.kernel(rows, len(index), True, zero, one)
    logger.debug("horizontal sections of degree <= %d: dimension %d over %s", degree, len(kernel), ring)

    order = sorted(range(len(index)), key=lambda c: (-index[c][0], index[c][1]))
    ordered_index = [index[c] for c in order]
    reduced, pivots = linalg.echelon([[v[c] for c in order] for v in kernel], True)
    candidates = sorted(zip(pivots, reduced), key=lambda pr: (ordered_index[pr[0]][0], pr[0]))

    generators: List[Vector] = []
    spanned: List[List[RingElem]] = []
    for pivot, row in candidates:
        if spanned and linalg.in_span(spanned, row, True):
            continue
        section = _section(row, ordered_index, r, alg)
        generators.append(section)
        lead_degree = ordered_index[pivot][0]
        shift = 0
        while lead_degree + p * shift <= degree:
            moved = [z * AElem.monomial(alg, p * shift) for z in section]
            spanned.append(_coords(moved, ordered_index))
            shift += 1
    return generators


def qdiff_to_higgs(ctx: PhiContext, module: QDiffModule, degree: Optional[int] = None) -> HiggsModule:
    """Recover (H, u_H) from the Phi-horizontal sections of x-degree at most ``degree``."""
    alg, p, r = ctx.algebra, ctx.p, module.rank
    degree = p if degree is None else degree
    source = ctx.frobenius.source_algebra
    if r == 0:
        return HiggsModule(source, [])
    generators = phi_horizontal_sections(ctx, module, degree)
    if len(generators) < r:
        raise UnderSaturationError(
            f"only {len(generators)} horizontal generators of rank {r} below degree {degree}; increase the degree bound"
        )
    if len(generators) > r:
        raise InternalConsistencyError(f"{len(generators)} independent horizontal generators for rank {r}")
    zero, one = alg.zero(), alg.one()
    S = [[generators[j][i] for j in range(r)] for i in range(r)]
    det_inverse = linalg.determinant(S, zero, one).try_invert()
    if det_inverse is None:
        raise UnderSaturationError(f"horizontal sections below degree {degree} span a proper submodule")
    S_inv = [[z * det_inverse for z in row] for row in linalg.adjugate(S, zero, one)]

    limit = get_settings().nilpotency_limit + degree + 1
    chains = [iterates(module, g, limit) or [] for g in generators]
    top = max((len(c) - 1) // p for c in chains)
    untwisted_d_p = _untwist(ctx, max(top, 1))[1]
    images = [_apply_central(untwisted_d_p, chain, p, r, alg) for chain in chains]
    U_A = linalg.mat_mul(S_inv, [[images[j][i] for j in range(r)] for i in range(r)], zero)

    theta = [[_descend(ctx, z) for z in row] for row in U_A]
    _check_recovered(ctx, module, generators, S, theta)
    return HiggsModule(source, theta)


def _descend(ctx: PhiContext, z: AElem) -> AElem:
    """The element of A' mapping to z under F*, when z lies in R[x^p]."""
    p = ctx.p
    terms = z.terms()
    if any(m % p for m in terms):
        raise InternalConsistencyError(f"recovered Higgs entry {z} is not a polynomial in x^{p}")
    return AElem.from_coeffs(ctx.frobenius.source_algebra, {m // p: c for m, c in terms.items()})


def _check_recovered(
    ctx: PhiContext, module: QDiffModule, generators: Sequence[Vector], S: Matrix, theta: Matrix
) -> None:
    """d(g_j) = x^(p-1) sum_l F*(u_lj) g_l, computed without Phi."""
    alg, r = ctx.algebra, module.rank
    lead = alg.x ** (ctx.p - 1)
    pulled = [[ctx.frobenius.frobenius_linear(z) for z in row] for row in theta]
    expected = linalg.mat_mul(S, pulled, alg.zero())
    for j, g in enumerate(generators):
        actual = module.apply_d(g)
        if any(actual[i] != lead * expected[i][j] for i in range(r)):
            raise InternalConsistencyError(f"recovered Higgs field disagrees with d on generator {j}")


def p_curvature_matrix(module: QDiffModule) -> Matrix:
    """Matrix of d^p on the basis, column j = d^p(e_j); A-linear at q-characteristic p."""
    p = q_char(module.algebra.ring)
    if p == 0:
        raise PreconditionError(f"{module.algebra.ring} has q-characteristic 0")
    columns = []
    for j in range(module.rank):
        s = module.basis_vector(j)
        for _ in range(p):
            s = module.apply_d(s)
        columns.append(s)
    return [[columns[j][i] for j in range(module.rank)] for i in range(module.rank)]
