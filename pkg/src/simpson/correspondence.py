"""Roundtrip checks of the twisted Simpson correspondence on a fixed suite of Higgs fields."""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..config import get_settings
from ..errors import InternalConsistencyError, UnderSaturationError, UnknownSuiteError
from ..rings import RingElem, linalg
from ..twisted import AElem, TwistedAlgebra
from .modules import HiggsModule, Matrix, higgs_to_qdiff, qdiff_to_higgs
from .phi import PhiContext

logger = logging.getLogger(__name__)

# Entries are {x'-exponent: integer coefficient}.
_DEFAULT_SUITE: Dict[str, List[List[Dict[int, int]]]] = {
    "rank1-zero": [[{}]],
    "rank2-e12": [[{}, {0: 1}], [{}, {}]],
    "rank2-x-e12": [[{}, {1: 1}], [{}, {}]],
    "rank2-x2plus1-e12": [[{}, {2: 1, 0: 1}], [{}, {}]],
    "rank2-full": [[{1: 1}, {2: -1}], [{0: 1}, {1: -1}]],
    "rank3-jordan": [[{}, {0: 1}, {}], [{}, {}, {0: 1}], [{}, {}, {}]],
    "rank3-e13": [[{}, {}, {0: 1}], [{}, {}, {}], [{}, {}, {}]],
    "rank3-mixed": [[{}, {1: 1}, {}], [{}, {}, {0: 1}], [{}, {}, {}]],
}


def higgs_from_rows(algebra: TwistedAlgebra, rows: Sequence[Sequence[Dict[int, int]]]) -> HiggsModule:
    return HiggsModule(algebra, [[AElem.from_coeffs(algebra, dict(entry)) for entry in row] for row in rows])


def default_suite(ctx: PhiContext) -> Dict[str, HiggsModule]:
    """Nilpotent Higgs fields of ranks 1 to 3 with entries of x'-degree at most 2."""
    source = ctx.frobenius.source_algebra
    return {name: higgs_from_rows(source, rows) for name, rows in _DEFAULT_SUITE.items()}


def higgs_suite(ctx: PhiContext, name: str = "default") -> Dict[str, HiggsModule]:
    if name != "default":
        raise UnknownSuiteError(f"unknown Higgs suite {name!r}; available: default")
    return default_suite(ctx)


def _matrix_entries(a: Matrix, b: Matrix) -> Matrix:
    zero = a[0][0].algebra.zero()
    return linalg.mat_mul(a, b, zero)


def are_similar(u: HiggsModule, v: HiggsModule, degree: int = 2, seed: Optional[int] = None, attempts: int = 16) -> bool:
    """Whether P u = v P for some P invertible over A', searched among entries of degree <= ``degree``.

    The solutions P form an R-space computed exactly; invertibility is then
    tested on its basis and on seeded random combinations. A negative answer
    means no invertible P was found.
    """
    if u.rank != v.rank or u.algebra != v.algebra:
        return False
    if u.theta == v.theta:
        return True
    alg, r = u.algebra, u.rank
    ring = alg.ring
    zero, one = RingElem.integer(ring, 0), RingElem.integer(ring, 1)
    unknowns = [(i, j, e) for i in range(r) for j in range(r) for e in range(degree + 1)]
    entries: Dict[tuple, Dict[int, RingElem]] = {}
    for col, (i, j, e) in enumerate(unknowns):
        P = [[AElem.monomial(alg, e) if (a, b) == (i, j) else alg.zero() for b in range(r)] for a in range(r)]
        lhs = _matrix_entries(P, u.theta)
        rhs = _matrix_entries(v.theta, P)
        for a in range(r):
            for b in range(r):
                for m, c in (lhs[a][b] - rhs[a][b]).terms().items():
                    entries.setdefault((a, b, m), {})[col] = c
    rows = [[row.get(col, zero) for col in range(len(unknowns))] for _, row in sorted(entries.items())]
    kernel = linalg.kernel(rows, len(unknowns), ring.is_field, zero, one)
    if not kernel:
        return False

    def build(vector: Sequence[RingElem]) -> Matrix:
        terms: List[List[Dict[int, RingElem]]] = [[{} for _ in range(r)] for _ in range(r)]
        for (i, j, e), c in zip(unknowns, vector):
            if not c.is_zero:
                terms[i][j][e] = c
        return [[AElem.from_coeffs(alg, t) for t in row] for row in terms]

    rng = random.Random(get_settings().default_seed if seed is None else seed)
    candidates = list(kernel)
    for _ in range(attempts):
        weights = [RingElem.integer(ring, rng.randint(-3, 3)) for _ in kernel]
        combo = [zero] * len(unknowns)
        for w, vec in zip(weights, kernel):
            combo = [a + w * b for a, b in zip(combo, vec)]
        candidates.append(combo)
    for vector in candidates:
        det = linalg.determinant(build(vector), alg.zero(), alg.one())
        if det.try_invert() is not None:
            return True
    return False


@dataclass
class RoundtripResult:
    name: str
    rank: int
    passed: bool
    recovered: Optional[HiggsModule] = None
    message: str = ""
    derivation: List[list] = field(default_factory=list)

    def to_data(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "passed": self.passed,
            "message": self.message,
            "recovered": self.recovered.to_data()["theta"] if self.recovered is not None else None,
            "derivation": self.derivation,
        }


def roundtrip(ctx: PhiContext, name: str, higgs: HiggsModule, degree: Optional[int] = None, seed: Optional[int] = None) -> RoundtripResult:
    """H -> A (x)_{A'} H -> H' and compare H' with H up to A'-similarity."""
    module = higgs_to_qdiff(ctx, higgs)
    derivation = module.to_data()["derivation"]
    try:
        recovered = qdiff_to_higgs(ctx, module, degree)
    except (UnderSaturationError, InternalConsistencyError) as exc:
        logger.warning("roundtrip %s failed: %s", name, exc)
        return RoundtripResult(name, higgs.rank, False, None, str(exc), derivation)
    similar = are_similar(higgs, recovered, seed=seed)
    message = "similar" if similar else "recovered Higgs field is not similar to the input"
    return RoundtripResult(name, higgs.rank, similar, recovered, message, derivation)


def run_suite(
    ctx: PhiContext,
    suite: Dict[str, HiggsModule],
    degree: Optional[int] = None,
    seed: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> List[RoundtripResult]:
    """Roundtrip every module in the suite; results come back sorted by name."""
    workers = get_settings().max_workers if max_workers is None else max_workers
    names = sorted(suite)
    if workers <= 1:
        results = [roundtrip(ctx, n, suite[n], degree, seed) for n in names]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda n: roundtrip(ctx, n, suite[n], degree, seed), names))
    passed = sum(r.passed for r in results)
    logger.info("Simpson roundtrip over %s: %d/%d passed", ctx.algebra.ring, passed, len(results))
    return sorted(results, key=lambda r: r.name)
