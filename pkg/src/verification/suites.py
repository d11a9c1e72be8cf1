"""Named identity suites behind ``verify``.

Each suite turns a RunConfig into a list of VerificationCase objects. A
case fails when its identity is false or when the computation raised a
CalculusError; the error class is kept in the case data so the CLI can
tell a falsified divisibility statement from an ordinary failure.
"""

import logging
import random
import time
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, List, Sequence

from sympy import Rational, primerange

from ..divided import (
    DividedPowerRing,
    DPElem,
    ThetaPoly,
    reduction_commutes_with_comul,
    taylor_reduces_to_identity,
    divided_p_power,
    dp_comul,
    dp_from_poly,
    dp_sigma,
    dp_sigma_iterated,
    dp_twisted_mul,
    truncated_taylor_bijective,
    general_divided_power,
    horizontal_sections,
    is_coassociative,
    is_taylor_constant,
    mod_xi_reduce,
    pairing,
    pairing_table,
    pairing_tensor,
    structure_constant,
    taylor0,
    theta_comul,
)
from ..errors import CalculusError, DivisibilityError, UnknownSuiteError
from ..frobenius import (
    FrobeniusContext,
    MixedElem,
    b_diagonal,
    b_edge_identity_holds,
    b_from_a,
    b_top,
    b_top_is_factorial_power,
    c_identity_holds,
    coeff_A,
    coeff_B,
    mixed_to_divided,
    divided_to_mixed,
    preserves_filtration,
    a_exchanged_sum_holds,
    q_exchange_identity_holds,
    zbinomial,
    zfactorial,
    zint,
)
from ..models import RunConfig, VerificationCase, VerificationReport
from ..rings import (
    RingDescriptor,
    RingElem,
    RingKind,
    ZPoly,
    exact_divide,
    is_q_divisible,
    is_q_flat,
    linalg,
    q_binomial,
    q_char,
    q_factorial,
    q_int,
    q_lucas,
)
from ..simpson import (
    CentralPoly,
    PhiContext,
    azumaya_action_holds,
    azumaya_matrix,
    higgs_suite,
    run_suite,
)
from ..twisted import (
    AElem,
    PInfQuotient,
    TwistedAlgebra,
    XiPoly,
    from_twisted_basis,
    q1_comul_check,
    to_twisted_basis,
    twisted_mul_in_twisted_basis,
    twisted_power,
    x_plus_xi_power,
)
from ..weyl import (
    CurvaturePoly,
    WeylElem,
    center_basis,
    centralizer_basis,
    curvature_commutes_with_x,
    expected_center,
    expected_centralizer,
    p_curvature,
    spanned_by,
    spans_equal,
    weyl_apply,
    weyl_mul_via_duality,
)

logger = logging.getLogger(__name__)

Suite = Callable[[RunConfig], List[VerificationCase]]

_SUITES: Dict[str, Suite] = {}

# Sample sizes of the randomized checks
_RING_SAMPLES = 100
_POLY_SAMPLES = 50
_PAIR_SAMPLES = 20

# p(m + n) bound for divided Frobenius multiplicativity
_DIVIDED_FROBENIUS_BOUND = 10
# total degree bound for the mixed basis of the mixed basis isomorphism
_MIXED_BASIS_DEGREE = 8


def register(name: str) -> Callable[[Suite], Suite]:
    def wrap(fn: Suite) -> Suite:
        _SUITES[name] = fn
        return fn

    return wrap


def available_suites() -> List[str]:
    return sorted(_SUITES)


def run_verification(config: RunConfig) -> VerificationReport:
    """Run the suite named in ``config`` and return its sorted report."""
    if config.suite not in _SUITES:
        raise UnknownSuiteError(f"unknown suite {config.suite!r}; available: {', '.join(available_suites())}")
    started = time.perf_counter()
    cases = _SUITES[config.suite](config)
    report = VerificationReport(suite=config.suite, params=config.params(), cases=cases).sorted()
    logger.info(
        "suite %s: %d cases, %d failures in %.2fs",
        config.suite,
        len(report.cases),
        report.failures,
        time.perf_counter() - started,
    )
    return report


def check(key: str, fn: Callable[[], object], detail: str = "") -> VerificationCase:
    """Evaluate one identity; ``fn`` returns a bool or a (bool, data) pair."""
    try:
        outcome = fn()
    except CalculusError as exc:
        logger.warning("case %s raised %s: %s", key, type(exc).__name__, exc)
        return VerificationCase(key=key, passed=False, detail=str(exc), data={"error": type(exc).__name__})
    if isinstance(outcome, tuple):
        passed, data = outcome
    else:
        passed, data = outcome, {}
    if not passed:
        logger.debug("case %s failed", key)
    return VerificationCase(key=key, passed=bool(passed), detail=detail, data=data)


def has_falsifier(report: VerificationReport) -> bool:
    """Whether some case failed on a divisibility statement."""
    return any(c.data.get("error") == DivisibilityError.__name__ for c in report.cases)


def _rings(config: RunConfig, defaults: Sequence[str]) -> List[RingDescriptor]:
    texts = [config.ring] if config.ring else list(defaults)
    return [RingDescriptor.parse(t) for t in texts]


def _primes(config: RunConfig) -> List[int]:
    return list(primerange(2, config.pmax + 1))


def _rng(config: RunConfig) -> random.Random:
    return random.Random(config.seed)


def _random_scalar(ring: RingDescriptor, rng: random.Random) -> RingElem:
    if ring.has_h:
        terms = {(i, j): rng.randint(-3, 3) for i in range(3) for j in range(2)}
    else:
        terms = {(i,): rng.randint(-3, 3) for i in range(4)}
    return RingElem.from_terms(ring, terms)


def _random_a(algebra: TwistedAlgebra, rng: random.Random, degree: int = 2) -> AElem:
    return AElem.from_coeffs(algebra, {m: rng.randint(-3, 3) for m in range(degree + 1)})


def _random_xi(algebra: TwistedAlgebra, rng: random.Random, degree: int) -> XiPoly:
    return XiPoly(algebra, [_random_a(algebra, rng, 1) for _ in range(degree + 1)])


def _span_vectors(elems: Sequence[AElem], degree: int) -> List[List[RingElem]]:
    return [[z.coefficient(m) for m in range(degree + 1)] for z in elems]


# -- rings and q-analogs -----------------------------------------------


@register("ring-axioms")
def ring_axioms_suite(config: RunConfig) -> List[VerificationCase]:
    """Commutative ring laws on random triples, F*_R multiplicativity and units among q-integers."""
    cases = []
    rng = _rng(config)
    for ring in _rings(config, ["Zt", "Zts", "CycF:3", "CycF:4", "CycR:5", "Fp:5"]):
        triples = [tuple(_random_scalar(ring, rng) for _ in range(3)) for _ in range(_RING_SAMPLES)]
        p = ring.p or 2
        laws = {
            "commutative": lambda a, b, c: a * b == b * a and a + b == b + a,
            "associative": lambda a, b, c: (a * b) * c == a * (b * c) and (a + b) + c == a + (b + c),
            "distributive": lambda a, b, c: a * (b + c) == a * b + a * c,
            "frobenius": lambda a, b, c: (a * b).frobenius(p) == a.frobenius(p) * b.frobenius(p),
        }
        for law, holds in laws.items():
            cases.append(
                check(f"{ring}/{law}", lambda h=holds: (all(h(*t) for t in triples), {"samples": len(triples)}))
            )
        q = RingElem.q(ring)
        char = q_char(ring)
        if char:
            for m in range(1, 4 * char + 1):
                if m % char == 0:
                    cases.append(check(f"{ring}/qint-zero/{m}", lambda m=m: q_int(q, m).is_zero))
                elif ring.is_field:
                    cases.append(check(f"{ring}/qint-unit/{m}", lambda m=m: q_int(q, m).is_unit()))
        else:
            for m in range(2, 13):
                value = q_int(q, m)
                cases.append(check(f"{ring}/qint-nonunit/{m}", lambda v=value: not v.is_zero and not v.is_unit()))
    return cases


@register("q-analogs")
def q_analogs_suite(config: RunConfig) -> List[VerificationCase]:
    """Symmetry, (m)_q as a binomial and the factorial product identity in Z[t]."""
    cases = []
    ring = config.descriptor
    q = RingElem.q(ring)
    for n in range(13):
        for k in range(n + 1):
            cases.append(check(f"{ring}/symmetry/{n},{k}", lambda n=n, k=k: q_binomial(q, n, k) == q_binomial(q, n, n - k)))
    for m in range(21):
        cases.append(check(f"{ring}/qint-binomial/{m}", lambda m=m: q_int(q, m) == q_binomial(q, m, 1)))
    for m in range(9):
        for n in range(9):
            cases.append(
                check(
                    f"Zt/product/{m},{n}",
                    lambda m=m, n=n: exact_divide(zfactorial(m + n), zfactorial(n) * zfactorial(m)) == zbinomial(m + n, n),
                )
            )
    return cases


@register("lucas")
def lucas_suite(config: RunConfig) -> List[VerificationCase]:
    """binom(n, k)_q equals its Lucas factorization, and the sign identity on q-flat rings."""
    defaults = [f"CycF:{p}" for p in range(2, config.pmax + 1)]
    defaults += [f"Fp:{p}" for p in _primes(config)] + [f"CycR:{p}" for p in _primes(config)]
    cases = []
    for ring in _rings(config, defaults):
        p = q_char(ring)
        if p == 0:
            cases.append(VerificationCase(key=f"{ring}/lucas", passed=False, detail="needs positive q-characteristic"))
            continue
        q = RingElem.q(ring)
        for n in range(3 * p + 1):
            for k in range(3 * p + 1):
                cases.append(check(f"{ring}/lucas/{n},{k}", lambda n=n, k=k: q_binomial(q, n, k) == q_lucas(ring, n, k)))
        if is_q_flat(ring):
            for i in range(7):
                e = i * p
                sign = 1 if i % 2 == 0 else -1
                cases.append(check(f"{ring}/minus-one-power/{i}", lambda e=e, sign=sign: RingElem.integer(ring, (-1) ** e) == q ** (e * (e - 1) // 2) * sign))
    return cases


# -- twisted powers ------------------------------------------------------


@register("twisted")
def twisted_suite(config: RunConfig) -> List[VerificationCase]:
    """Twisted powers, basis change, sigma on A[xi] and the twisted Leibniz rule."""
    cases = []
    rng = _rng(config)
    for ring in _rings(config, ["Zt", "Zts", "CycF:3"]):
        alg = TwistedAlgebra.polynomial(ring)
        xi = XiPoly.xi(alg)
        for n in range(11):
            shifts = XiPoly.constant(alg, 1)
            for i in range(n):
                shifts = shifts * xi.sigma(i)
            cases.append(check(f"{ring}/product-of-shifts/{n}", lambda n=n, s=shifts: twisted_power(alg, n) == s))
        samples = [_random_xi(alg, rng, rng.randint(0, 8)) for _ in range(_POLY_SAMPLES)]
        cases.append(
            check(
                f"{ring}/basis-roundtrip",
                lambda: all(from_twisted_basis(alg, to_twisted_basis(f)) == f for f in samples),
            )
        )
        pairs = [(_random_xi(alg, rng, 3), _random_xi(alg, rng, 3)) for _ in range(_PAIR_SAMPLES)]
        cases.append(check(f"{ring}/sigma-multiplicative", lambda: all((f * g).sigma() == f.sigma() * g.sigma() for f, g in pairs)))
        for n in range(7):
            lhs = alg.one()
            for i in range(n):
                lhs = lhs * alg.y.sigma(i)
            cases.append(check(f"{ring}/y-twisted-power/{n}", lambda n=n, lhs=lhs: lhs == alg.y ** n * alg.q ** (n * (n - 1) // 2)))
        for m in range(5):
            for n in range(5):
                cases.append(
                    check(
                        f"{ring}/twisted-basis-product/{m},{n}",
                        lambda m=m, n=n: to_twisted_basis(twisted_power(alg, m) * twisted_power(alg, n))
                        == twisted_mul_in_twisted_basis(alg, m, n),
                    )
                )
        q, y = alg.q, alg.y
        for n in range(9):
            coeffs = [alg.zero()] * (n + 1)
            for i in range(n + 1):
                coeffs[n - i] = y ** i * (q_factorial(q, i) * q_binomial(q, n, i))
            cases.append(check(f"{ring}/sigma-twisted-power/{n}", lambda n=n, c=coeffs: twisted_power(alg, n).sigma(1) == from_twisted_basis(alg, c)))
        elems = [(_random_a(alg, rng, 3), _random_a(alg, rng, 3)) for _ in range(_PAIR_SAMPLES)]
        cases.append(
            check(
                f"{ring}/leibniz",
                lambda: all((a * b).derive() == a * b.derive() + b.sigma() * a.derive() for a, b in elems),
            )
        )
        p = q_char(ring)
        if p and not ring.has_h:
            cases.append(check(f"{ring}/sigma-p-xi", lambda p=p: xi.sigma(p) == xi))
        if not ring.has_h:
            for m in range(7):
                expected = from_twisted_basis(alg, [AElem.monomial(alg, m - i, q_binomial(q, m, i)) for i in range(m + 1)])
                cases.append(check(f"{ring}/x-plus-xi-binomial/{m}", lambda m=m, e=expected: x_plus_xi_power(alg, m) == e))
    five = TwistedAlgebra.polynomial(RingDescriptor.parse("Fp:5"))
    generic = TwistedAlgebra.polynomial(RingDescriptor.parse("Zts"))
    for n in range(5):
        cases.append(check(f"Fp:5/q1-comul/{n}", lambda n=n: q1_comul_check(n, five.one())))
        cases.append(check(f"Zts/q1-comul/{n}", lambda n=n: q1_comul_check(n, AElem.scalar(generic, generic.h))))
    return cases


# -- divided powers ------------------------------------------------------


@register("sqform-assoc")
def divided_ring_suite(config: RunConfig) -> List[VerificationCase]:
    """The divided power multiplication is a commutative ring law, compatible with sigma."""
    cases = []
    rng = _rng(config)
    bound = config.nmax
    for ring in _rings(config, ["Zt"]):
        alg = TwistedAlgebra.polynomial(ring)
        dp = DividedPowerRing.standard(alg)
        N = 3 * bound
        basis = [dp.basis(i, N) for i in range(bound + 1)]
        for a, b, c in product(range(bound + 1), repeat=3):
            cases.append(
                check(
                    f"{ring}/assoc/{a},{b},{c}",
                    lambda a=a, b=b, c=c: (basis[a] * basis[b]) * basis[c] == basis[a] * (basis[b] * basis[c]),
                )
            )
        for a, b in combinations_with_replacement(range(bound + 1), 2):
            cases.append(check(f"{ring}/commute/{a},{b}", lambda a=a, b=b: basis[a] * basis[b] == basis[b] * basis[a]))
            cases.append(
                check(
                    f"{ring}/symmetric-constants/{a},{b}",
                    lambda a=a, b=b: all(
                        structure_constant(dp, a, b, i) == structure_constant(dp, b, a, i) for i in range(min(a, b) + 1)
                    ),
                )
            )
        cases.append(check(f"{ring}/unit", lambda: all(dp.one(N) * e == e for e in basis)))
        pairs = [(_random_xi(alg, rng, 4), _random_xi(alg, rng, 4)) for _ in range(_POLY_SAMPLES)]
        cases.append(
            check(
                f"{ring}/dp-from-poly-multiplicative",
                lambda: (all(dp_from_poly(f * g, 8) == dp_from_poly(f, 8) * dp_from_poly(g, 8) for f, g in pairs), {"samples": len(pairs)}),
            )
        )
        small = [dp.basis(i, bound) for i in range(bound + 1)]
        for n in range(4):
            cases.append(check(f"{ring}/sigma-closed-form/{n}", lambda n=n: all(dp_sigma(e, n) == dp_sigma_iterated(e, n) for e in small)))
        for a, b in combinations_with_replacement(range(bound + 1), 2):
            if a + b <= bound:
                cases.append(
                    check(
                        f"{ring}/sigma-multiplicative/{a},{b}",
                        lambda a=a, b=b: dp_sigma(small[a] * small[b]) == dp_sigma(small[a]) * dp_sigma(small[b]),
                    )
                )
        for n in range(bound + 1):
            for m in range(bound + 1 - n):
                expected = dp.basis(n + m, n + m) * q_binomial(alg.q, m + n, n)
                cases.append(check(f"{ring}/twisted-mul/{n},{m}", lambda n=n, m=m, e=expected: dp_twisted_mul(alg, n, m) == e))
    return cases


@register("comul")
def comul_suite(config: RunConfig) -> List[VerificationCase]:
    """Coassociativity and multiplicativity of delta, and the pairing dualities."""
    cases = []
    rng = _rng(config)
    bound = min(config.nmax, 6)
    for ring in _rings(config, ["Zt", "CycF:3"]):
        alg = TwistedAlgebra.polynomial(ring)
        dp = DividedPowerRing.standard(alg)
        for n in range(bound + 1):
            cases.append(check(f"{ring}/coassociative/{n}", lambda n=n: is_coassociative(dp.basis(n, bound))))
        for a, b in combinations_with_replacement(range(bound + 1), 2):
            if a + b > bound:
                continue
            ea, eb = dp.basis(a, bound), dp.basis(b, bound)
            cases.append(check(f"{ring}/comul-multiplicative/{a},{b}", lambda ea=ea, eb=eb: dp_comul(ea * eb) == dp_comul(ea) * dp_comul(eb)))
        thetas = [ThetaPoly.theta(alg, k) for k in range(bound + 1)]
        for a, b in product(range(bound + 1), repeat=2):
            for n in range(bound + 1):
                w = dp.basis(n, bound)
                cases.append(
                    check(
                        f"{ring}/pairing-dual/{a},{b},{n}",
                        lambda a=a, b=b, w=w: pairing(thetas[a] * thetas[b], w) == pairing_tensor(thetas[a], thetas[b], dp_comul(w)),
                    )
                )
        one_minus_y_theta = ThetaPoly(alg, [1, -alg.y])
        samples = [
            (ThetaPoly(alg, [rng.randint(-3, 3) for _ in range(4)]), DPElem(dp, 4, [_random_a(alg, rng) for _ in range(5)]))
            for _ in range(_PAIR_SAMPLES)
        ]
        cases.append(
            check(
                f"{ring}/pairing-sigma",
                lambda: all(pairing(one_minus_y_theta * f, dp_sigma(g)) == pairing(f, g).sigma() for f, g in samples),
            )
        )
    generic = TwistedAlgebra.polynomial(RingDescriptor.parse("Zt"))
    q_one = DividedPowerRing(generic, RingElem.integer(generic.ring, 1), generic.x, "omega")
    for k in range(5):
        table = theta_comul(ThetaPoly.theta(generic, k), q_one)
        for i, j in product(range(5), repeat=2):
            N = i + j
            a, b = q_one.basis(i, N), q_one.basis(j, N)
            cases.append(
                check(
                    f"Zt/theta-comul-dual/{k},{i},{j}",
                    lambda t=table, a=a, b=b, k=k: pairing_table(t, a, b) == pairing(ThetaPoly.theta(generic, k), a * b),
                )
            )
    return cases


@register("pmap")
def pmap_suite(config: RunConfig) -> List[VerificationCase]:
    """The divided p-power map: homomorphism, reduction modulo (xi) and compatibility with sigma."""
    defaults = [f"CycF:{p}" for p in range(2, config.pmax + 1)] + [f"Fp:{p}" for p in _primes(config)]
    bound = min(config.nmax, 4)
    cases = []
    for ring in _rings(config, defaults):
        alg = TwistedAlgebra.polynomial(ring)
        p = q_char(ring)
        source = DividedPowerRing.omega(alg, p)
        target = DividedPowerRing.standard(alg)
        for k, l in combinations_with_replacement(range(bound + 1), 2):
            N = k + l
            cases.append(
                check(
                    f"{ring}/homomorphism/{k},{l}",
                    lambda k=k, l=l, N=N: divided_p_power(source.basis(k, N) * source.basis(l, N))
                    == divided_p_power(source.basis(k, N)) * divided_p_power(source.basis(l, N)),
                )
            )
        top = 3 * p
        for j in range(top + 1):
            image = mod_xi_reduce(target.basis(j, top))
            expected = source.basis(j // p, 3) if j % p == 0 else DPElem(source, 3)
            cases.append(check(f"{ring}/mod-xi/{j}", lambda image=image, expected=expected: image == expected))
        for k in range(4):
            w = source.basis(k, 3)
            cases.append(check(f"{ring}/section/{k}", lambda w=w: mod_xi_reduce(divided_p_power(w)) == w))
            cases.append(
                check(
                    f"{ring}/sigma-divided-p-power/{k}",
                    lambda w=w: mod_xi_reduce(dp_sigma(divided_p_power(w))) == mod_xi_reduce(divided_p_power(dp_sigma(w))),
                )
            )
            cases.append(check(f"{ring}/general-coincides/{k}", lambda k=k: general_divided_power(alg, k, p, 3 * p) == divided_p_power(source.basis(k, 3), 3 * p)))
        for k in range(4):
            cases.append(check(f"{ring}/reduction-comul/{k}", lambda k=k: reduction_commutes_with_comul(alg, k)))
        for a in range(2 * p + 1):
            z = AElem.monomial(alg, a)
            cases.append(check(f"{ring}/taylor-reduction/{a}", lambda z=z: taylor_reduces_to_identity(z, 2 * p)))
            cases.append(check(f"{ring}/taylor-equalizer/{a}", lambda z=z: is_taylor_constant(z, 2 * p) == z.derive().is_zero))
        cases.append(check(f"{ring}/truncated-taylor", lambda: truncated_taylor_bijective(alg)))
    return cases


# -- Weyl algebra --------------------------------------------------------


@register("duality")
def duality_suite(config: RunConfig) -> List[VerificationCase]:
    """Composition of operators agrees with composition of functionals on divided powers."""
    cases = []
    for ring in _rings(config, ["Zts", "CycF:3"]):
        alg = TwistedAlgebra.polynomial(ring)
        monomials = {(a, b): WeylElem.monomial(alg, a, b) for a in range(4) for b in range(4)}
        for (k1, u), (k2, v) in product(monomials.items(), repeat=2):
            if k1[1] + k2[1] > 6:
                continue
            cases.append(
                check(
                    f"{ring}/duality/{k1[0]},{k1[1]}|{k2[0]},{k2[1]}",
                    lambda u=u, v=v: weyl_mul_via_duality(u, v, 6) == u * v,
                )
            )
        probe = AElem.from_coeffs(alg, {0: 1, 1: 2, 3: -1})
        for (k1, u), (k2, v) in product(monomials.items(), repeat=2):
            if k1[1] + k2[1] > 4:
                continue
            cases.append(
                check(
                    f"{ring}/apply/{k1[0]},{k1[1]}|{k2[0]},{k2[1]}",
                    lambda u=u, v=v: weyl_apply(u * v, probe) == weyl_apply(u, weyl_apply(v, probe)),
                )
            )
        cases.append(check(f"{ring}/associative", lambda: all((u * v) * w == u * (v * w) for u, v, w in product(list(monomials.values())[:8], repeat=3))))
    return cases


@register("center")
def center_suite(config: RunConfig) -> List[VerificationCase]:
    """Brute-force centralizer and center against x^a d^(pb) and x^(pa) d^(pb)."""
    defaults = [f"CycF:{p}" for p in (2, 3, 5) if p <= config.pmax] + [f"Fp:{p}" for p in (2, 3) if p <= config.pmax]
    cases = []
    for ring in _rings(config, defaults):
        alg = TwistedAlgebra.polynomial(ring)
        p = q_char(ring)
        degree = config.degree if config.ring else 2 * p
        found = centralizer_basis(alg, degree)
        expected = expected_centralizer(alg, degree)
        data = {"degree": degree, "dimension": len(found)}
        if ring.is_field or p == 0:
            cases.append(check(f"{ring}/centralizer", lambda f=found, e=expected: (spans_equal(f, e), data)))
        else:
            cases.append(check(f"{ring}/centralizer-contained", lambda f=found, e=expected: (spanned_by(f, e), data)))
        if p and is_q_divisible(ring):
            basis = center_basis(alg, degree)
            cases.append(
                check(
                    f"{ring}/center",
                    lambda b=basis: (spans_equal(b, expected_center(alg, degree)), {"degree": degree, "basis": [str(op) for op in b]}),
                )
            )
            for k in range(5):
                f = CurvaturePoly.theta(alg, k)
                cases.append(check(f"{ring}/curvature-commutes/{k}", lambda f=f: curvature_commutes_with_x(f, 4)))
                for l in range(5 - k):
                    g = CurvaturePoly.theta(alg, l)
                    cases.append(
                        check(f"{ring}/curvature-multiplicative/{k},{l}", lambda f=f, g=g: p_curvature(f * g) == p_curvature(f) * p_curvature(g))
                    )
            images = [p_curvature(CurvaturePoly.theta(alg, k, AElem.monomial(alg, a))) for k in range(degree // p + 1) for a in range(degree + 1)]
            cases.append(check(f"{ring}/centralizer-is-curvature-image", lambda i=images: spans_equal(found, i)))
    return cases


# -- Frobenius -----------------------------------------------------------


@register("coefficients")
def coefficients_suite(config: RunConfig) -> List[VerificationCase]:
    """A_{n,i} support, integrality of B_{n,i}, closed forms and the exchange lemmas in Z[t]."""
    cases = []
    nmax = config.nmax
    primes = [config.p] if config.p else _primes(config)
    for p in primes:
        for n in range(nmax + 1):
            cases.append(check(f"p={p}/A-top/{n}", lambda n=n, p=p: coeff_A(n, p * n, p) == ZPoly([1])))
            for i in range(p * n + 3):
                if i < n or i > p * n:
                    cases.append(check(f"p={p}/A-vanishes/{n},{i}", lambda n=n, i=i, p=p: coeff_A(n, i, p).is_zero))
                else:
                    cases.append(check(f"p={p}/B-integral/{n},{i}", lambda n=n, i=i, p=p: (True, {"B": coeff_B(n, i, p).to_data()})))
                    cases.append(check(f"p={p}/C-identity/{n},{i}", lambda n=n, i=i, p=p: c_identity_holds(n, i, p)))
            cases.append(check(f"p={p}/B-diagonal/{n}", lambda n=n, p=p: coeff_B(n, n, p) == b_diagonal(n, p)))
            cases.append(check(f"p={p}/B-top/{n}", lambda n=n, p=p: coeff_B(n, p * n, p) == b_top(n, p)))
            cycf = RingDescriptor(kind=RingKind.CYCLOTOMIC_FIELD, p=p)
            cases.append(check(f"p={p}/B-top-factorial/{n}", lambda n=n, r=cycf: b_top_is_factorial_power(n, r)))
        cycf = RingDescriptor(kind=RingKind.CYCLOTOMIC_FIELD, p=p)
        for n in range(1, p + 1):
            cases.append(check(f"p={p}/B-edge/{n}", lambda n=n, r=cycf: b_edge_identity_holds(n, r)))
        for n in range(min(nmax, 4) + 1):
            for i in range(p * n + 1):
                cases.append(check(f"p={p}/A-exchanged-sum/{n},{i}", lambda n=n, i=i, p=p: a_exchanged_sum_holds(n, i, p)))
    for m in range(7):
        for n in range(7):
            cases.append(check(f"exchange/{m},{n}", lambda m=m, n=n: q_exchange_identity_holds(m, n)))
    return cases


def _frobenius_contexts(config: RunConfig, ps: Sequence[int]) -> List[FrobeniusContext]:
    if config.ring:
        ring = config.descriptor
        alg = TwistedAlgebra.polynomial(ring)
        if q_char(ring) == 0:
            return [FrobeniusContext(alg, p) for p in ps]
        return [FrobeniusContext(alg)]
    contexts = []
    generic = TwistedAlgebra.polynomial(RingDescriptor.parse("Zt"))
    for p in ps:
        contexts.append(FrobeniusContext(generic, p))
        contexts.append(FrobeniusContext(TwistedAlgebra.polynomial(RingDescriptor.parse(f"CycF:{p}"))))
    return contexts


@register("gooddf")
def divided_frobenius_suite(config: RunConfig) -> List[VerificationCase]:
    """The divided Frobenius is multiplicative and agrees with F* on twisted powers."""
    cases = []
    rng = _rng(config)
    ps = [config.p] if config.p else list(range(2, min(config.pmax, 4) + 1))
    for ctx in _frobenius_contexts(config, ps):
        p, label = ctx.p, f"{ctx.algebra.ring}/p={ctx.p}"
        for m, n in combinations_with_replacement(range(_DIVIDED_FROBENIUS_BOUND // p + 1), 2):
            if p * (m + n) <= _DIVIDED_FROBENIUS_BOUND:
                cases.append(check(f"{label}/multiplicative/{m},{n}", lambda m=m, n=n, c=ctx: c.multiplicative_on(m, n)))
        for n in range(4):
            if p * n <= _DIVIDED_FROBENIUS_BOUND:
                cases.append(check(f"{label}/subs/{n}", lambda n=n, c=ctx: c.subs_holds(n)))
                cases.append(
                    check(
                        f"{label}/twisted-power/{n}",
                        lambda n=n, c=ctx: c.frobenius_twisted_power(n)[0] == c.twisted_power_oracle(n),
                    )
                )
        src = ctx.source_algebra
        pairs = [(_random_a(src, rng), _random_a(src, rng)) for _ in range(_PAIR_SAMPLES)]
        cases.append(
            check(
                f"{label}/frobenius-on-A",
                lambda c=ctx, pairs=pairs: all(c.frobenius_on_A(a * b) == c.frobenius_on_A(a) * c.frobenius_on_A(b) for a, b in pairs),
            )
        )
        if q_char(ctx.algebra.ring):
            cases.append(check(f"{label}/adapted", lambda c=ctx: c.is_adapted(2 * c.p)))
    return cases


@register("mixed-basis")
def mixed_basis_suite(config: RunConfig) -> List[VerificationCase]:
    """Forward then inverse is the identity on the mixed basis; the forward map keeps filtrations."""
    cases = []
    defaults = [f"CycF:{p}" for p in (2, 3) if p <= config.pmax]
    for ring in _rings(config, defaults):
        ctx = FrobeniusContext(TwistedAlgebra.polynomial(ring))
        p = ctx.p
        for n in range(_MIXED_BASIS_DEGREE // p + 1):
            for k in range(p):
                if p * n + k > _MIXED_BASIS_DEGREE:
                    continue
                basis = MixedElem.basis(ctx.algebra, p, k, n)
                cases.append(
                    check(
                        f"{ring}/roundtrip/{k},{n}",
                        lambda b=basis: divided_to_mixed(ctx, mixed_to_divided(ctx, b, _MIXED_BASIS_DEGREE)) == b,
                    )
                )
                cases.append(check(f"{ring}/filtration/{k},{n}", lambda k=k, n=n: preserves_filtration(ctx, k, n, _MIXED_BASIS_DEGREE)))
    return cases


# -- Phi and Simpson -----------------------------------------------------


def _phi_contexts(config: RunConfig, defaults: Sequence[str]) -> List[PhiContext]:
    return [PhiContext(TwistedAlgebra.polynomial(ring)) for ring in _rings(config, defaults)]


@register("comdlef")
def phi_comul_suite(config: RunConfig) -> List[VerificationCase]:
    """delta commutes with [F*], Phi matches [F*] by duality, and A (x)_{A'} A is A[xi]/xi^(p)."""
    cases = []
    for ctx in _phi_contexts(config, ["CycF:2", "CycF:3"]):
        ring = ctx.algebra.ring
        for n in range(4):
            cases.append(check(f"{ring}/comul-frobenius/{n}", lambda n=n, c=ctx: c.comul_commutes_with_frobenius(n)))
        for n in range(2 * ctx.p + 1):
            cases.append(check(f"{ring}/phi-duality/{n}", lambda n=n, c=ctx: c.duality_crosscheck_holds(n)))
            image = ctx.phi_d_power(n)
            cases.append(check(f"{ring}/phi-central/{n}", lambda img=image, c=ctx: all(k % c.p == 0 for _, k in img.terms())))
        cases.append(check(f"{ring}/tensor-over-source", lambda c=ctx: c.tensor_over_source_is_truncation()))
        cases.append(check(f"{ring}/adapted", lambda c=ctx: c.frobenius.is_adapted(4 * c.p)))
    return cases


@register("azumaya")
def azumaya_suite(config: RunConfig) -> List[VerificationCase]:
    """The matrices of x, d and x d multiply like the operators, truncated at d^(3p)."""
    cases = []
    for ctx in _phi_contexts(config, ["CycF:2", "CycF:3"]):
        alg = ctx.algebra
        ops = {"x": WeylElem.monomial(alg, 1, 0), "d": WeylElem.d(alg), "xd": WeylElem.monomial(alg, 1, 1)}
        for (na, a), (nb, b) in product(ops.items(), repeat=2):
            cases.append(check(f"{alg.ring}/action/{na},{nb}", lambda a=a, b=b, c=ctx: azumaya_action_holds(c, a, b, 3)))
    return cases


@register("simpson")
def simpson_suite(config: RunConfig) -> List[VerificationCase]:
    """Roundtrip of the default Higgs suite through q-difference modules."""
    cases = []
    for ctx in _phi_contexts(config, ["CycF:2", "CycF:3", "Fp:2"]):
        results = run_suite(ctx, higgs_suite(ctx), seed=config.seed)
        for result in results:
            cases.append(
                VerificationCase(
                    key=f"{ctx.algebra.ring}/{result.name}",
                    passed=result.passed,
                    detail=result.message,
                    data=result.to_data(),
                )
            )
    return cases


# -- examples and negative controls ---------------------------------------


def _ring(text: str) -> RingDescriptor:
    return RingDescriptor.parse(text)


def _example_values() -> Dict[str, Callable[[], object]]:
    zt, zts, cyc2, cyc3 = (TwistedAlgebra.polynomial(_ring(t)) for t in ("Zt", "Zts", "CycF:2", "CycF:3"))
    checks: Dict[str, Callable[[], object]] = {}

    q, y = zt.q, zt.y
    dp = DividedPowerRing.standard(zt)
    e2 = dp.basis(2, 4)
    checks["dp-square"] = lambda: e2 * e2 == DPElem(
        dp, 4, [0, 0, y ** 2 * q, -(y * (q_int(q, 3) * q_int(q, 2))), q_int(q ** 2, 2) * q_int(q, 3)]
    )
    for k in range(6):
        checks[f"xi-times-basis/{k}"] = lambda k=k: dp.basis(k, k + 1) * dp.basis(1, k + 1) == DPElem(
            dp, k + 1, [0] * k + [-(y * q_int(q, k)), q_int(q, k + 1)]
        )
    checks["qbinom-4-2"] = lambda: q_binomial(q, 4, 2) == RingElem.from_terms(zt.ring, {(0,): 1, (1,): 1, (2,): 2, (3,): 1, (4,): 1})
    checks["qfactorial-3"] = lambda: q_factorial(q, 3) == RingElem.from_terms(zt.ring, {(0,): 1, (1,): 2, (2,): 2, (3,): 1})
    checks["twisted-power-2"] = lambda: twisted_power(zt, 2) == XiPoly(zt, [0, y, 1])
    checks["dp-from-poly-xi2"] = lambda: dp_from_poly(XiPoly(zt, [0, 0, 1]), 2) == DPElem(dp, 2, [0, -y, q_int(q, 2)])

    qs, hs = zts.q, zts.h
    x2 = AElem.monomial(zts, 2)
    checks["taylor-x2"] = lambda: taylor0(x2, 4) == DPElem(
        DividedPowerRing.standard(zts), 4, [x2, zts.x * (1 + qs) + hs, 1 + qs]
    )
    checks["pinf-taylor-x2"] = lambda: PInfQuotient(zts, 2).taylor(x2) == [x2, zts.x * (1 + qs) + hs, zts.one()]

    laurent = TwistedAlgebra.laurent(_ring("CycF:7"))
    ql = laurent.q
    inverse_expected = [
        AElem.monomial(laurent, -(k + 1), q_factorial(ql, k) * ql ** (-(k * (k + 1) // 2)) * (-1) ** k) for k in range(5)
    ]
    checks["taylor-inverse-x"] = lambda: taylor0(AElem.monomial(laurent, -1), 4) == DPElem(
        DividedPowerRing.standard(laurent), 4, inverse_expected
    )

    checks["sigma2-xi2-q-minus-1"] = lambda: dp_sigma(DividedPowerRing.standard(cyc2).basis(2, 2), 2) == DPElem(
        DividedPowerRing.standard(cyc2), 2, [cyc2.y ** 2, 0, 1]
    )
    checks["twisted-mul-2-1-cyc3"] = lambda: dp_twisted_mul(cyc3, 2, 1).is_zero

    for text, expected in (("Zt", [1]), ("CycF:3", [1, 0, 0, 1, 0, 0, 1]), ("Fp:2", [1, 0, 1, 0, 1])):
        alg = TwistedAlgebra.polynomial(_ring(text))
        degree = len(expected) - 1
        basis = [AElem.monomial(alg, m) for m, c in enumerate(expected) if c]
        checks[f"horizontal/{text}"] = lambda alg=alg, degree=degree, basis=basis: linalg.same_span(
            _span_vectors(horizontal_sections(alg, degree), degree), _span_vectors(basis, degree), alg.ring.is_field
        )

    cycf4 = _ring("CycF:4")
    checks["invert-2q-cycf4"] = lambda: q_int(RingElem.q(cycf4), 2).try_invert() == RingElem.from_terms(
        cycf4, {(0,): Rational(1, 2), (1,): Rational(-1, 2)}
    )

    for p in (2, 3, 5):
        checks[f"B-1-1/p={p}"] = lambda p=p: coeff_B(1, 1, p) == ZPoly([1])
        checks[f"B-1-2/p={p}"] = lambda p=p: coeff_B(1, 2, p) == zint(p - 1)
        checks[f"B-2-2/p={p}"] = lambda p=p: coeff_B(2, 2, p) == ZPoly.monomial(p - 1)
        checks[f"B-3-3/p={p}"] = lambda p=p: coeff_B(3, 3, p) == ZPoly.monomial(3 * (p - 1))
    checks["B-2-3-cycf3"] = lambda: coeff_B(2, 3, 3).specialize(cyc3.ring) == cyc3.q ** 2 - 1

    for alg in (cyc2, cyc3):
        ctx = PhiContext(alg)
        p, qa = ctx.p, alg.q
        checks[f"phi-d/{alg.ring}"] = lambda ctx=ctx, alg=alg, p=p: ctx.phi(WeylElem.d(alg)) == WeylElem.monomial(alg, p - 1, p)
        checks[f"phi-d2/{alg.ring}"] = lambda ctx=ctx, alg=alg, p=p, qa=qa: ctx.phi(WeylElem.d(alg, 2)) == WeylElem.from_terms(
            alg, {(p - 2, p): q_int(qa, p - 1), (2 * p - 2, 2 * p): qa ** (p - 1)}
        )
        checks[f"azumaya-d/{alg.ring}"] = lambda ctx=ctx: azumaya_matrix(ctx, WeylElem.d(ctx.algebra), 3) == expected_d_matrix(ctx, 3)
        checks[f"azumaya-x/{alg.ring}"] = lambda ctx=ctx: azumaya_matrix(ctx, WeylElem.monomial(ctx.algebra, 1, 0), 3) == expected_x_matrix(ctx, 3)
        checks[f"azumaya-one/{alg.ring}"] = lambda ctx=ctx: azumaya_matrix(ctx, WeylElem.scalar(ctx.algebra, 1), 3) == expected_identity_matrix(ctx, 3)
        checks[f"xi-image/{alg.ring}"] = lambda ctx=ctx, alg=alg, p=p: ctx.frobenius.xi_image() == twisted_power(alg, p)
    ctx3 = PhiContext(cyc3)
    # the d^3 coefficient is B_{1,3}(q) = (2)_q!
    checks["phi-d3/CycF:3"] = lambda: ctx3.phi(WeylElem.d(cyc3, 3)) == WeylElem.from_terms(
        cyc3, {(0, 3): q_factorial(cyc3.q, 2), (3, 6): cyc3.q ** 2 - 1, (6, 9): RingElem.integer(cyc3.ring, 1)}
    )
    checks["center/CycF:3"] = lambda: spans_equal(
        center_basis(cyc3, 6), [WeylElem.monomial(cyc3, a, b) for a in (0, 3, 6) for b in (0, 3, 6)]
    )

    for p in (2, 3):
        ctx = FrobeniusContext(zt, p)
        expected = {i: AElem.monomial(zt, p - i, q_factorial(q, i - 1) * q_binomial(q, p - 1, i - 1)) for i in range(1, p + 1)}
        checks[f"omega1-image/p={p}"] = lambda ctx=ctx, e=expected, p=p: all(ctx.basis_image(1, p).coefficient(i) == c for i, c in e.items())
        first = from_twisted_basis(zt, [zt.zero()] + [AElem.monomial(zt, p - i, q_binomial(q, p, i)) for i in range(1, p + 1)])
        checks[f"frobenius-xi/p={p}"] = lambda ctx=ctx, f=first: ctx.frobenius_twisted_power(1)[0] == f
    return checks


def expected_d_matrix(ctx: PhiContext, trunc: int) -> List[List[CentralPoly]]:
    """Superdiagonal q^j X D + (j)_q in column j, and D in the corner."""
    p, q = ctx.p, ctx.algebra.q
    matrix = [[CentralPoly(trunc) for _ in range(p)] for _ in range(p)]
    for j in range(1, p):
        matrix[j - 1][j] = CentralPoly(trunc, {(1, 1): q ** j, (0, 0): q_int(q, j)})
    matrix[p - 1][0] = CentralPoly(trunc, {(0, 1): RingElem.integer(ctx.algebra.ring, 1)})
    return matrix


def expected_x_matrix(ctx: PhiContext, trunc: int) -> List[List[CentralPoly]]:
    """Subdiagonal ones and X in the corner."""
    p = ctx.p
    one = RingElem.integer(ctx.algebra.ring, 1)
    matrix = [[CentralPoly(trunc) for _ in range(p)] for _ in range(p)]
    for j in range(p - 1):
        matrix[j + 1][j] = CentralPoly(trunc, {(0, 0): one})
    matrix[0][p - 1] = CentralPoly(trunc, {(1, 0): one})
    return matrix


def expected_identity_matrix(ctx: PhiContext, trunc: int) -> List[List[CentralPoly]]:
    p = ctx.p
    one = RingElem.integer(ctx.algebra.ring, 1)
    return [[CentralPoly(trunc, {(0, 0): one} if i == j else {}) for j in range(p)] for i in range(p)]


@register("examples")
def examples_suite(config: RunConfig) -> List[VerificationCase]:
    """Closed-form values that every implementation of the calculus must reproduce."""
    return [check(key, fn) for key, fn in _example_values().items()]


def _raises_divisibility(fn: Callable[[], object]) -> bool:
    try:
        fn()
    except DivisibilityError:
        return True
    return False


@register("negative-controls")
def negative_controls_suite(config: RunConfig) -> List[VerificationCase]:
    """Statements that must fail: each case passes when the failure is observed."""
    cyc2 = TwistedAlgebra.polynomial(_ring("CycF:2"))
    ctx = PhiContext(cyc2)
    dp = DividedPowerRing.standard(cyc2)
    corrupted = {(2, 3, 2), (3, 4, 2), (2, 4, 3)}

    def phi_not_multiplicative():
        lhs, rhs = ctx.nonhom_witness()
        return lhs != rhs, {"phi(d o d)": str(lhs), "phi(d) o phi(d)": str(rhs)}

    def sigma_p_not_identity():
        image = dp_sigma(dp.basis(2, 2), 2)
        return image != dp.basis(2, 2) and image == dp.basis(2, 2) + DPElem.scalar(dp, cyc2.y ** 2, 2), {"image": str(image)}

    cases = [
        check("phi-not-multiplicative", phi_not_multiplicative),
        check("sigma-p-not-identity", sigma_p_not_identity),
    ]
    for n, i, p in sorted(corrupted):
        cases.append(
            check(
                f"corrupted-A/{n},{i},p={p}",
                lambda n=n, i=i, p=p: _raises_divisibility(lambda: b_from_a(coeff_A(n, i, p) + ZPoly([1]), n, i, p)),
            )
        )
    return cases
