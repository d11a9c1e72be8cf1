"""Unit tests for the twisted algebra and A[xi]."""

import pytest
from hypothesis import given, strategies as st

from src.errors import DescriptorMismatchError, PreconditionError
from src.rings import RingDescriptor, q_binomial, q_int
from src.twisted import (
    AElem,
    PInfQuotient,
    TwistedAlgebra,
    XiPoly,
    from_twisted_basis,
    q1_comul_check,
    substitute_x_plus_xi,
    to_twisted_basis,
    twisted_mul_in_twisted_basis,
    twisted_power,
    x_plus_xi_power,
)

ZT_ALG = TwistedAlgebra.polynomial(RingDescriptor.parse("Zt"))


def _a_elems(degree: int = 3):
    return st.dictionaries(st.integers(0, degree), st.integers(-4, 4), max_size=degree + 1).map(
        lambda c: AElem.from_coeffs(ZT_ALG, c)
    )


def _xi_polys(degree: int = 3):
    return st.lists(_a_elems(2), max_size=degree + 1).map(lambda cs: XiPoly(ZT_ALG, cs))


@pytest.mark.unit
class TestTwistedAlgebra:
    """Test sigma and the sigma-derivation on A."""

    def test_sigma_and_y(self, alg_zt):
        """sigma(x) = qx and y = (1 - q)x."""
        q = alg_zt.q

        assert alg_zt.x.sigma() == alg_zt.x * q
        assert alg_zt.y == alg_zt.x * (1 - q)

    def test_sigma_with_h(self, alg_zts):
        """sigma(x) = qx + h, sigma^2(x) = q^2 x + (2)_q h, sigma(y) = qy."""
        q, h = alg_zts.q, alg_zts.h
        x = alg_zts.x

        assert x.sigma() == x * q + h
        assert x.sigma(2) == x * q ** 2 + q_int(q, 2) * h
        assert alg_zts.y.sigma() == alg_zts.y * q

    def test_derivative_of_monomials(self, alg_zt):
        """d(x^m) = (m)_q x^(m-1)."""
        for m in range(6):
            expected = AElem.monomial(alg_zt, m - 1, q_int(alg_zt.q, m)) if m else alg_zt.zero()
            assert AElem.monomial(alg_zt, m).derive() == expected

    def test_derivative_normalized(self, alg_zts):
        """d(x) = 1 and d kills R."""
        assert alg_zts.x.derive() == 1
        assert AElem.scalar(alg_zts, alg_zts.h).derive().is_zero

    @given(_a_elems(), _a_elems())
    def test_twisted_leibniz(self, a, b):
        """d(ab) = a d(b) + sigma(b) d(a)."""
        assert (a * b).derive() == a * b.derive() + b.sigma() * a.derive()

    def test_twisted_leibniz_with_h(self, alg_zts):
        """The Leibniz rule also holds when sigma(x) = qx + h."""
        a = AElem.from_coeffs(alg_zts, {0: 1, 2: 3})
        b = AElem.from_coeffs(alg_zts, {1: -1, 3: 2})

        assert (a * b).derive() == a * b.derive() + b.sigma() * a.derive()

    def test_laurent_inverse(self):
        """d(1/x) = -q^(-1) x^(-2) on the Laurent variant."""
        alg = TwistedAlgebra.laurent(RingDescriptor.parse("CycF:5"))
        inv = AElem.monomial(alg, -1)

        assert inv * alg.x == 1
        assert inv.derive() == AElem.monomial(alg, -2, -(alg.q ** -1))
        assert alg.x.try_invert() == inv

    def test_laurent_needs_invertible_q(self):
        """Z[t] has no Laurent variant."""
        with pytest.raises(ValueError):
            TwistedAlgebra.laurent(RingDescriptor.parse("Zt"))

    def test_laurent_needs_h_zero(self):
        """Z[t, s] has no Laurent variant either."""
        with pytest.raises(ValueError):
            TwistedAlgebra.laurent(RingDescriptor.parse("Zts"))

    def test_negative_exponent_outside_laurent(self, alg_zt):
        """x^(-1) is not in R[x]."""
        with pytest.raises(PreconditionError):
            AElem.monomial(alg_zt, -1)

    def test_units(self, alg_zt):
        """x is not a unit of R[x]."""
        assert alg_zt.x.try_invert() is None
        assert AElem.scalar(alg_zt, -1).try_invert() == -1

    def test_divide_by_x(self, alg_zt):
        """Exact division by x^k."""
        z = AElem.from_coeffs(alg_zt, {2: 1, 3: 4})

        assert z.divide_by_x(2) == AElem.from_coeffs(alg_zt, {0: 1, 1: 4})
        with pytest.raises(PreconditionError):
            z.divide_by_x(3)

    def test_mixing_algebras_fails(self, alg_zt, alg_cycf3):
        """Elements over different algebras do not combine."""
        with pytest.raises(DescriptorMismatchError):
            alg_zt.x + alg_cycf3.x

    def test_to_data(self, alg_zt):
        """Sparse [exponent, coefficients] pairs."""
        q = alg_zt.q
        z = AElem.from_coeffs(alg_zt, {0: 2, 3: q})

        assert z.to_data() == [[0, [2]], [3, [0, 1]]]

    def test_zero_has_no_terms(self, alg_cycf2):
        x = alg_cycf2.x

        assert AElem.from_coeffs(alg_cycf2, {}).terms() == {}
        assert (x - x).terms() == {}
        assert (x - x).to_data() == []


@pytest.mark.unit
class TestTwistedPowers:
    """Test twisted powers and the twisted basis of A[xi]."""

    def test_second_twisted_power(self, alg_zt):
        """xi^(2) = xi^2 + y xi."""
        assert twisted_power(alg_zt, 2) == XiPoly(alg_zt, [0, alg_zt.y, 1])

    def test_twisted_power_is_product_of_shifts(self, alg_zts):
        """xi^(n) = prod_{i<n} sigma^i(xi)."""
        xi = XiPoly.xi(alg_zts)
        product = XiPoly.constant(alg_zts, 1)
        for n in range(6):
            assert twisted_power(alg_zts, n) == product
            product = product * xi.sigma(n)

    def test_negative_order(self, alg_zt):
        """Twisted powers of negative order are undefined."""
        with pytest.raises(PreconditionError):
            twisted_power(alg_zt, -1)

    @given(_xi_polys())
    def test_basis_roundtrip(self, f):
        """from_twisted_basis inverts to_twisted_basis."""
        assert from_twisted_basis(ZT_ALG, to_twisted_basis(f)) == f

    @given(_xi_polys(2), _xi_polys(2))
    def test_sigma_multiplicative(self, f, g):
        """sigma is a ring map on A[xi]."""
        assert (f * g).sigma() == f.sigma() * g.sigma()

    @pytest.mark.parametrize("m,n", [(0, 3), (1, 1), (2, 2), (2, 3), (4, 1)])
    def test_product_rule(self, alg_zt, m, n):
        """xi^(m) xi^(n) in the twisted basis by the closed product rule."""
        product = twisted_power(alg_zt, m) * twisted_power(alg_zt, n)

        assert to_twisted_basis(product) == twisted_mul_in_twisted_basis(alg_zt, m, n)

    def test_sigma_p_fixes_xi(self, alg_cycf3):
        """sigma^p(xi) = xi + (p)_q y = xi at q-characteristic p."""
        xi = XiPoly.xi(alg_cycf3)

        assert xi.sigma(3) == xi
        assert xi.sigma(2) != xi

    def test_binomial_expansion(self, alg_zt):
        """(x + xi)^m = sum_i {m, i}_q x^(m-i) xi^(i)."""
        q = alg_zt.q
        for m in range(5):
            expected = from_twisted_basis(alg_zt, [AElem.monomial(alg_zt, m - i, q_binomial(q, m, i)) for i in range(m + 1)])
            assert x_plus_xi_power(alg_zt, m) == expected

    def test_substitute_rejects_poles(self):
        """z(x + xi) needs z polynomial."""
        alg = TwistedAlgebra.laurent(RingDescriptor.parse("CycF:3"))

        with pytest.raises(PreconditionError):
            substitute_x_plus_xi(AElem.monomial(alg, -1))

    def test_q1_comultiplication(self):
        """At q = 1 the twisted powers satisfy the binomial comultiplication."""
        alg = TwistedAlgebra.polynomial(RingDescriptor.parse("Fp:3"))
        generic = TwistedAlgebra.polynomial(RingDescriptor.parse("Zts"))

        for n in range(4):
            assert q1_comul_check(n, alg.one())
            assert q1_comul_check(n, AElem.scalar(generic, generic.h))


@pytest.mark.unit
class TestPInfQuotient:
    """Test A[xi]/xi^(n+1)."""

    def test_taylor_of_x_squared(self, alg_zts):
        """x^2 -> x^2 + ((1 + q)x + h) xi^(1) + xi^(2)."""
        q, h = alg_zts.q, alg_zts.h
        x2 = AElem.monomial(alg_zts, 2)

        assert PInfQuotient(alg_zts, 2).taylor(x2) == [x2, alg_zts.x * (1 + q) + h, alg_zts.one()]

    def test_truncation_drops_high_terms(self, alg_zt):
        """Reduction keeps order + 1 twisted coefficients."""
        quotient = PInfQuotient(alg_zt, 1)
        product = quotient.multiply([alg_zt.zero(), alg_zt.one()], [alg_zt.zero(), alg_zt.one()])

        # xi * xi = xi^(2) - y xi^(1)
        assert product == [alg_zt.zero(), -alg_zt.y]

    def test_negative_order(self, alg_zt):
        """The quotient order is nonnegative."""
        with pytest.raises(PreconditionError):
            PInfQuotient(alg_zt, -1)
