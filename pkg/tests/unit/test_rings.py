"""Unit tests for coefficient rings and q-analogs."""

import pytest
from hypothesis import given, settings as hsettings, strategies as st
from sympy import Rational

from src.errors import DescriptorMismatchError, DescriptorParseError, DivisibilityError, InternalConsistencyError, PreconditionError
from src.rings import (
    QContext,
    QFraction,
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

DESCRIPTORS = ["Zt", "Zts", "CycF:3", "CycF:4", "CycR:5", "Fp:5"]


def _elements(text: str):
    ring = RingDescriptor.parse(text)
    if ring.has_h:
        coeffs = st.dictionaries(
            st.tuples(st.integers(0, 2), st.integers(0, 1)), st.integers(-5, 5), max_size=4
        )
    else:
        coeffs = st.dictionaries(st.tuples(st.integers(0, 4)), st.integers(-5, 5), max_size=4)
    return coeffs.map(lambda terms: RingElem.from_terms(ring, terms))


@pytest.mark.unit
class TestRingDescriptor:
    """Test descriptor parsing."""

    @pytest.mark.parametrize("text", DESCRIPTORS + ["CycF:2", "Fp:2"])
    def test_roundtrip_text(self, text):
        """Descriptors print back as they were typed."""
        assert str(RingDescriptor.parse(text)) == text

    @pytest.mark.parametrize("text", ["Qx", "CycF", "CycF:x", "Zt:3", "CycR:4", "Fp:9", "CycF:1", ""])
    def test_bad_descriptors(self, text):
        """Unknown families, missing or composite orders are parse errors."""
        with pytest.raises(DescriptorParseError):
            RingDescriptor.parse(text)

    def test_properties(self):
        """Fields, h and declared q-characteristic."""
        zts = RingDescriptor.parse("Zts")
        cycf = RingDescriptor.parse("CycF:4")

        assert zts.has_h and not zts.is_field and zts.declared_q_char == 0
        assert cycf.is_field and not cycf.has_h and cycf.declared_q_char == 4
        assert RingDescriptor(kind=RingKind.PRIME_FIELD, p=3) == RingDescriptor.parse("Fp:3")


@pytest.mark.unit
class TestRingElem:
    """Test arithmetic in R."""

    @given(_elements("Zt"), _elements("Zt"), _elements("Zt"))
    @hsettings(max_examples=40, deadline=None)
    def test_zt_ring_laws(self, a, b, c):
        """Commutativity, associativity and distributivity over Z[t]."""
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @pytest.mark.parametrize("text", ["Zts", "CycF:3", "CycR:5", "Fp:5"])
    def test_ring_laws_per_family(self, text):
        """Ring laws on sampled triples of every family."""

        @given(_elements(text), _elements(text), _elements(text))
        @hsettings(max_examples=20, deadline=None)
        def laws(a, b, c):
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a - a == 0

        laws()

    @given(_elements("Zt"), _elements("Zt"))
    @hsettings(max_examples=30, deadline=None)
    def test_frobenius_multiplicative(self, a, b):
        """F*_R: t -> t^p is a ring map."""
        assert (a * b).frobenius(3) == a.frobenius(3) * b.frobenius(3)
        assert (a + b).frobenius(2) == a.frobenius(2) + b.frobenius(2)

    def test_frobenius_fixes_q_on_quotients(self, cycf3):
        q = RingElem.q(cycf3)

        assert q.frobenius(3) == q

    def test_cyclotomic_reduction(self, cycf3):
        """q^3 = 1 and 1 + q + q^2 = 0 in CycF:3."""
        q = RingElem.q(cycf3)

        assert q ** 3 == 1
        assert (1 + q + q ** 2).is_zero
        assert q ** -1 == q ** 2

    def test_prime_field_q_is_one(self):
        """In Fp the class of t is 1."""
        ring = RingDescriptor.parse("Fp:5")
        q = RingElem.q(ring)

        assert q == 1
        assert RingElem.integer(ring, 5).is_zero

    def test_units(self, zt):
        """Units of Z[t] are +1 and -1; q is not one."""
        assert RingElem.integer(zt, -1).is_unit()
        assert not RingElem.q(zt).is_unit()
        assert RingElem.integer(zt, 2).try_invert() is None

    def test_cyclotomic_ring_units(self):
        """In CycR:5, 1 + q is a unit and 2 is not."""
        ring = RingDescriptor.parse("CycR:5")
        q = RingElem.q(ring)

        inverse = (1 + q).try_invert()
        assert inverse is not None
        assert inverse * (1 + q) == 1
        assert RingElem.integer(ring, 2).try_invert() is None

    def test_field_inverse_has_rational_coefficients(self):
        """(1 + q)^(-1) = (1 - q) / 2 in CycF:4."""
        ring = RingDescriptor.parse("CycF:4")
        q = RingElem.q(ring)

        assert (1 + q).try_invert() == RingElem.from_terms(ring, {(0,): Rational(1, 2), (1,): Rational(-1, 2)})

    def test_negative_power_of_non_unit(self, zt):
        """Negative powers need a unit."""
        with pytest.raises(PreconditionError):
            RingElem.q(zt) ** -1

    def test_mixing_rings_fails(self, zt, cycf3):
        """Elements of different rings do not combine."""
        with pytest.raises(DescriptorMismatchError):
            RingElem.q(zt) + RingElem.q(cycf3)

    def test_to_data(self, zt, zts):
        """Dense little-endian on Zt, sparse triples on Zts."""
        q = RingElem.q(zt)

        assert (1 + 2 * q ** 3).to_data() == [1, 0, 0, 2]
        assert RingElem.integer(zt, 0).to_data() == []
        h = RingElem.h(zts)
        assert (RingElem.q(zts) * h + 3).to_data() == [[0, 0, 3], [1, 1, 1]]

    @pytest.mark.parametrize("text", ["Zt", "Zts", "CycF:5", "Fp:3"])
    def test_from_data_inverts_to_data(self, text):
        """from_data reads back what to_data writes."""
        ring = RingDescriptor.parse(text)
        q = RingElem.q(ring)
        value = 3 * q ** 2 - q + 7 + RingElem.h(ring)

        assert RingElem.from_data(ring, value.to_data()) == value


@pytest.mark.unit
class TestQAnalogs:
    """Test q-integers, q-factorials and Gaussian binomials."""

    def test_qint_values(self, zt):
        """(m)_q = 1 + q + ... + q^(m-1), and (m)_q for negative m."""
        q = RingElem.q(zt)

        assert q_int(q, 0) == 0
        assert q_int(q, 4).to_data() == [1, 1, 1, 1]
        cycf = RingDescriptor.parse("CycF:5")
        qc = RingElem.q(cycf)
        assert q_int(qc, -2) == -(qc ** -2) * q_int(qc, 2)

    def test_qint_negative_needs_unit(self, zt):
        """(m)_q for m < 0 needs q invertible."""
        with pytest.raises(PreconditionError):
            q_int(RingElem.q(zt), -1)

    def test_factorial(self, zt):
        """(3)_q! = 1 + 2q + 2q^2 + q^3."""
        assert q_factorial(RingElem.q(zt), 3).to_data() == [1, 2, 2, 1]
        assert q_factorial(RingElem.q(zt), 0) == 1

    @pytest.mark.parametrize(
        "n,k,expected",
        [(4, 2, [1, 1, 2, 1, 1]), (0, 0, [1]), (3, 1, [1, 1, 1]), (5, 0, [1]), (3, 4, []), (3, -1, [])],
    )
    def test_binomial_table(self, zt, n, k, expected):
        """Pascal recurrence values, zero outside 0 <= k <= n."""
        assert q_binomial(RingElem.q(zt), n, k).to_data() == expected

    @given(st.integers(0, 9), st.integers(0, 9))
    @hsettings(max_examples=40, deadline=None)
    def test_binomial_symmetric(self, n, k):
        """{n, k}_q = {n, n-k}_q."""
        q = RingElem.q(RingDescriptor.parse("Zt"))

        assert q_binomial(q, n, k) == q_binomial(q, n, n - k)

    @given(st.integers(0, 6), st.integers(0, 6))
    @hsettings(max_examples=30, deadline=None)
    def test_factorial_product(self, m, n):
        """(m+n)_q! = {m+n, n}_q (m)_q! (n)_q!."""
        q = RingElem.q(RingDescriptor.parse("Zt"))

        assert q_factorial(q, m + n) == q_binomial(q, m + n, n) * q_factorial(q, m) * q_factorial(q, n)

    def test_at_q_one_binomials_are_classical(self):
        """Over Fp:7 with q = 1, {6, 3}_q = 20."""
        ring = RingDescriptor.parse("Fp:7")

        assert q_binomial(RingElem.q(ring), 6, 3) == 20

    def test_qcontext_power_base(self, zt):
        """QContext with power 2 uses q^2 as base."""
        ctx = QContext(zt, power=2)

        assert ctx.integer(2).to_data() == [1, 0, 1]
        assert ctx.char == 0


@pytest.mark.unit
class TestQCharacteristic:
    """Test q_char, q-divisibility and q-flatness."""

    @pytest.mark.parametrize("text,expected", [("Zt", 0), ("Zts", 0), ("CycF:2", 2), ("CycF:4", 4), ("CycR:5", 5), ("Fp:3", 3)])
    def test_q_char(self, text, expected):
        """The scanned order matches the declared one."""
        assert q_char(RingDescriptor.parse(text)) == expected

    def test_scan_extends_to_declared_order(self):
        """A bound below the declared order is raised to it."""
        assert q_char(RingDescriptor.parse("CycF:6"), bound=2) == 6

    @pytest.mark.parametrize(
        "text,divisible,flat",
        [("Zt", False, True), ("CycF:4", True, True), ("CycR:5", True, True), ("Fp:3", True, True)],
    )
    def test_divisible_and_flat(self, text, divisible, flat):
        """Fields of positive q-characteristic are q-divisible."""
        ring = RingDescriptor.parse(text)

        assert is_q_divisible(ring) is divisible
        assert is_q_flat(ring) is flat

    def test_lucas_factorization(self):
        """{n, k}_q = binom(n1, k1) {n0, k0}_q at q-characteristic 3."""
        ring = RingDescriptor.parse("CycF:3")
        q = RingElem.q(ring)

        for n in range(10):
            for k in range(10):
                assert q_binomial(q, n, k) == q_lucas(ring, n, k)

    def test_lucas_needs_positive_char(self, zt):
        """The Lucas factorization is undefined at q-characteristic 0."""
        with pytest.raises(PreconditionError):
            q_lucas(zt, 4, 2)

    def test_internal_consistency_error_type(self):
        """A scan disagreeing with the descriptor is an internal error."""
        assert issubclass(InternalConsistencyError, RuntimeError)


@pytest.mark.unit
class TestZPoly:
    """Test Z[t] helpers."""

    def test_exact_divide(self):
        """(1 - t^3) / (1 - t) = 1 + t + t^2."""
        assert exact_divide(ZPoly([1, 0, 0, -1]), ZPoly([1, -1])) == ZPoly([1, 1, 1])

    def test_exact_divide_fails_on_remainder(self):
        """Non-divisible pairs raise DivisibilityError."""
        with pytest.raises(DivisibilityError):
            exact_divide(ZPoly([1, 0, 1]), ZPoly([1, 1]))

    def test_exact_divide_fails_on_fractions(self):
        """Quotients with non-integral coefficients raise DivisibilityError."""
        with pytest.raises(DivisibilityError):
            exact_divide(ZPoly([1]), ZPoly([2]))

    def test_compose_power(self):
        """t -> t^3 spreads the coefficients."""
        assert ZPoly([1, 2]).compose_power(3) == ZPoly([1, 0, 0, 2])

    def test_specialize(self, cycf3):
        """(1 + t + t^2) vanishes at a primitive cube root of unity."""
        assert ZPoly([1, 1, 1]).specialize(cycf3).is_zero

    def test_qfraction_reduces(self):
        """(t^2 - 1) / (t - 1) reduces to t + 1 over 1."""
        f = QFraction(ZPoly([-1, 0, 1]), ZPoly([-1, 1]))

        assert f.is_polynomial
        assert f.num == ZPoly([1, 1])
        assert f.to_data() == {"num": [1, 1], "den": [1]}

    def test_qfraction_sign_normalized(self):
        """The denominator has positive leading coefficient."""
        f = QFraction(ZPoly([1]), ZPoly([1, -1]))

        assert f.den == ZPoly([-1, 1])
        assert f.num == ZPoly([-1])


@pytest.mark.unit
class TestLinalg:
    """Test exact linear algebra over R."""

    def test_rank_and_kernel_over_field(self, cycf3):
        """A rank-one 2x2 matrix has a one-dimensional kernel."""
        one, zero = RingElem.integer(cycf3, 1), RingElem.integer(cycf3, 0)
        q = RingElem.q(cycf3)
        rows = [[one, q], [q, q ** 2]]

        assert linalg.rank(rows, True) == 1
        kernel = linalg.kernel(rows, 2, True, zero, one)
        assert len(kernel) == 1
        v = kernel[0]
        assert (v[0] + q * v[1]).is_zero

    def test_determinant_and_adjugate(self, zt):
        """A adj(A) = det(A) I."""
        one, zero = RingElem.integer(zt, 1), RingElem.integer(zt, 0)
        q = RingElem.q(zt)
        a = [[one, q], [q + 1, RingElem.integer(zt, 3)]]

        det = linalg.determinant(a, zero, one)
        product = linalg.mat_mul(a, linalg.adjugate(a, zero, one), zero)

        assert det == 3 - q - q ** 2
        assert product == [[det, zero], [zero, det]]

    def test_same_span(self, zt):
        """Spans compare over the fraction field."""
        one = RingElem.integer(zt, 1)
        two = RingElem.integer(zt, 2)
        zero = RingElem.integer(zt, 0)

        assert linalg.same_span([[one, zero]], [[two, zero]], False)
        assert not linalg.same_span([[one, zero]], [[zero, one]], False)
