"""Tables and reports behind the ``qbinom``, ``frob-coeffs``, ``center`` and ``simpson`` subcommands."""

import logging
from typing import TYPE_CHECKING, Optional

from ..errors import PreconditionError
from ..frobenius import CoefficientTable
from ..models import RunConfig, TableReport, VerificationCase, VerificationReport
from ..rings import RingElem, is_q_divisible, q_binomial, q_char
from ..simpson import PhiContext, higgs_suite, run_suite
from ..twisted import TwistedAlgebra
from ..weyl import center_basis, centralizer_basis

if TYPE_CHECKING:
    from ..storage import DatabaseManager

logger = logging.getLogger(__name__)


def qbinom_table(config: RunConfig) -> TableReport:
    """{n, k}_q for k <= n <= nmax, coefficients dense little-endian in q."""
    ring = config.descriptor
    q = RingElem.q(ring)
    rows = [
        {"n": n, "k": k, "coefficients": q_binomial(q, n, k).to_data()}
        for n in range(config.nmax + 1)
        for k in range(n + 1)
    ]
    return TableReport(
        name="qbinom",
        params={"ring": str(ring), "nmax": config.nmax},
        columns=["n", "k", "coefficients"],
        rows=rows,
    )


def frob_coeff_table(config: RunConfig, store: Optional["DatabaseManager"] = None) -> TableReport:
    """A_{n,i}, B_{n,i} and C_{n,i} for n <= nmax, i <= pn.

    C is a ratio in Q(t) and takes two rows, its numerator and denominator.
    A DivisibilityError from B propagates to the caller.
    """
    if config.p is None:
        raise PreconditionError("frob-coeffs needs --p")
    table = CoefficientTable(config.p, store)
    rows = []
    for n, i, a, b, c in table.rows(config.nmax):
        rows.append({"family": "A", "n": n, "i": i, "coefficients": a.to_data()})
        rows.append({"family": "B", "n": n, "i": i, "coefficients": b.to_data()})
        rows.append({"family": "C-num", "n": n, "i": i, "coefficients": c.num.to_data()})
        rows.append({"family": "C-den", "n": n, "i": i, "coefficients": c.den.to_data()})
    logger.info("frob-coeffs p=%d nmax=%d: %d rows", config.p, config.nmax, len(rows))
    return TableReport(
        name="frob-coeffs",
        params={"p": config.p, "nmax": config.nmax},
        columns=["family", "n", "i", "coefficients"],
        rows=rows,
    )


def center_table(config: RunConfig) -> TableReport:
    """Bases of the centralizer of x and, where defined, of the center, in the degree box."""
    ring = config.descriptor
    algebra = TwistedAlgebra.polynomial(ring)
    degree = config.degree
    rows = []
    bases = [("centralizer", centralizer_basis(algebra, degree))]
    if q_char(ring) and is_q_divisible(ring) and not ring.has_h:
        bases.append(("center", center_basis(algebra, degree)))
    for kind, basis in bases:
        for index, op in enumerate(basis):
            terms = [[a, k, c.to_data()] for (a, k), c in sorted(op.terms().items())]
            rows.append({"kind": kind, "index": index, "operator": str(op), "terms": terms})
    return TableReport(
        name="center",
        params={"ring": str(ring), "degree": degree},
        columns=["kind", "index", "operator"],
        rows=rows,
    )


def simpson_report(config: RunConfig) -> VerificationReport:
    """Roundtrip verdicts for one q-divisible ring, with the recovered Higgs fields in the case data."""
    ring = config.descriptor
    char = q_char(ring)
    if config.p is not None and config.p != char:
        raise PreconditionError(f"--p {config.p} differs from the q-characteristic {char} of {ring}")
    ctx = PhiContext(TwistedAlgebra.polynomial(ring))
    name = config.suite or "default"
    results = run_suite(ctx, higgs_suite(ctx, name), seed=config.seed)
    cases = [
        VerificationCase(key=r.name, passed=r.passed, detail=r.message, data=r.to_data()) for r in results
    ]
    return VerificationReport(suite=f"simpson/{name}", params=config.params(), cases=cases).sorted()
