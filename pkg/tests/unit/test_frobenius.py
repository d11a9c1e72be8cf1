"""Unit tests for the p-Frobenius and its coefficient families."""

import pytest

from src.errors import DescriptorMismatchError, DivisibilityError, PreconditionError, TruncationError
from src.frobenius import (
    CoefficientTable,
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
    coeff_C,
    mixed_to_divided,
    divided_to_mixed,
    preserves_filtration,
    a_exchanged_sum_holds,
    q_exchange_identity_holds,
    zfactorial,
    zint,
)
from src.rings import RingDescriptor, ZPoly, q_binomial, q_factorial
from src.twisted import AElem, TwistedAlgebra, twisted_power


@pytest.mark.unit
class TestCoefficients:
    """Test A_{n,i}, B_{n,i} and C_{n,i} in Z[t]."""

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_closed_forms(self, p):
        """B_{1,1} = 1, B_{1,2} = (p-1)_t, B_{2,2} = t^(p-1), B_{3,3} = t^(3(p-1))."""
        assert coeff_B(1, 1, p) == ZPoly([1])
        assert coeff_B(1, 2, p) == zint(p - 1)
        assert coeff_B(2, 2, p) == ZPoly.monomial(p - 1)
        assert coeff_B(3, 3, p) == ZPoly.monomial(3 * (p - 1))

    @pytest.mark.parametrize("p", [2, 3])
    def test_support(self, p):
        """A_{n,i} vanishes off n <= i <= pn and A_{n,pn} = 1."""
        for n in range(4):
            assert coeff_A(n, p * n, p) == ZPoly([1])
            for i in range(p * n + 3):
                if i < n or i > p * n:
                    assert coeff_A(n, i, p).is_zero

    @pytest.mark.parametrize("p", [2, 3])
    def test_diagonal_and_top(self, p):
        for n in range(4):
            assert coeff_B(n, n, p) == b_diagonal(n, p)
            assert coeff_B(n, p * n, p) == b_top(n, p)

    def test_first_row_top_is_factorial(self):
        """B_{1,p} = (p-1)_t!."""
        for p in (2, 3, 5):
            assert coeff_B(1, p, p) == zfactorial(p - 1)

    def test_b_2_3_at_cube_root(self, cycf3):
        """B_{2,3}(q) = q^2 - 1 at a primitive cube root of unity."""
        q = TwistedAlgebra.polynomial(cycf3).q

        assert coeff_B(2, 3, 3).specialize(cycf3) == q ** 2 - 1

    def test_corrupted_a_is_not_divisible(self):
        """1 is not (1)_t! (2)_t times an integral polynomial."""
        with pytest.raises(DivisibilityError):
            b_from_a(ZPoly([1]), 1, 1, 2)

    def test_corrupted_a_off_by_one(self):
        """Perturbing a genuine A_{n,i} breaks integrality of B."""
        with pytest.raises(DivisibilityError):
            b_from_a(coeff_A(1, 1, 2) + ZPoly([1]), 1, 1, 2)

    def test_c_is_ratio(self):
        """C_{1,1} = B_{1,1}/B_{1,2} = 1 at p = 2."""
        c = coeff_C(1, 1, 2)

        assert c.is_polynomial
        assert c.num == c.den

    @pytest.mark.parametrize("n,i,p", [(1, 1, 2), (2, 3, 2), (2, 4, 3), (3, 5, 2)])
    def test_c_identity(self, n, i, p):
        assert c_identity_holds(n, i, p)

    @pytest.mark.parametrize("m,n", [(0, 0), (3, 2), (5, 4), (2, 3)])
    def test_exchange_identity(self, m, n):
        assert q_exchange_identity_holds(m, n)

    def test_exchanged_sum(self):
        for n in range(3):
            for i in range(2 * n + 1):
                assert a_exchanged_sum_holds(n, i, 2)

    @pytest.mark.parametrize("text", ["CycF:2", "CycF:3", "CycF:5"])
    def test_specialized_identities(self, text):
        """Edge identity for B_{n,p} and B_{n,pn} = ((p-1)_q!)^n at q-characteristic p."""
        ring = RingDescriptor.parse(text)
        for n in range(1, ring.p + 1):
            assert b_edge_identity_holds(n, ring)
        for n in range(3):
            assert b_top_is_factorial_power(n, ring)

    def test_edge_identity_needs_q_characteristic(self, zt):
        with pytest.raises(PreconditionError):
            b_edge_identity_holds(1, zt)

    def test_p_below_two(self):
        with pytest.raises(PreconditionError):
            coeff_A(1, 1, 1)


@pytest.mark.unit
class TestCoefficientTable:
    """Test CoefficientTable without a store."""

    def test_row_count(self):
        """n <= 2 at p = 2 gives 1 + 3 + 5 rows."""
        rows = list(CoefficientTable(2).rows(2))

        assert len(rows) == 9
        assert [(n, i) for n, i, *_ in rows][:4] == [(0, 0), (1, 0), (1, 1), (1, 2)]

    def test_values_match_functions(self):
        table = CoefficientTable(3)

        assert table.b(2, 4) == coeff_B(2, 4, 3)
        assert table.a(1, 2) == coeff_A(1, 2, 3)
        assert table.c(1, 1).num * coeff_B(1, 3, 3) == table.c(1, 1).den * coeff_B(1, 1, 3)

    def test_rejects_small_p(self):
        with pytest.raises(PreconditionError):
            CoefficientTable(1)


@pytest.mark.unit
class TestFrobeniusContext:
    """Test F* and the divided Frobenius."""

    def test_p_from_q_characteristic(self, alg_cycf3):
        assert FrobeniusContext(alg_cycf3).p == 3

    def test_p_required_at_q_characteristic_zero(self, alg_zt):
        with pytest.raises(PreconditionError):
            FrobeniusContext(alg_zt)

    def test_p_must_match(self, alg_cycf3):
        with pytest.raises(PreconditionError):
            FrobeniusContext(alg_cycf3, 2)

    def test_needs_h_zero(self, alg_zts):
        with pytest.raises(PreconditionError):
            FrobeniusContext(alg_zts, 2)

    @pytest.mark.parametrize("p", [2, 3])
    def test_first_basis_image(self, alg_zt, p):
        """[F*](omega) = sum_i (i-1)_q! {p-1, i-1}_q x^(p-i) xi^[i]."""
        q = alg_zt.q
        image = FrobeniusContext(alg_zt, p).basis_image(1, p)

        for i in range(1, p + 1):
            expected = AElem.monomial(alg_zt, p - i, q_factorial(q, i - 1) * q_binomial(q, p - 1, i - 1))
            assert image.coefficient(i) == expected
        assert image.coefficient(0).is_zero

    @pytest.mark.parametrize("p", [2, 3])
    def test_twisted_powers(self, alg_zt, p):
        """F*(xi'^(n)) from A_{n,i} agrees with the product of shifted p-th powers."""
        ctx = FrobeniusContext(alg_zt, p)

        for n in range(3):
            assert ctx.frobenius_twisted_power(n)[0] == ctx.twisted_power_oracle(n)

    def test_substitution(self, alg_zt):
        ctx = FrobeniusContext(alg_zt, 2)

        for n in range(3):
            assert ctx.subs_holds(n)

    @pytest.mark.parametrize("text", ["Zt", "CycF:2"])
    def test_multiplicative(self, text):
        alg = TwistedAlgebra.polynomial(RingDescriptor.parse(text))
        ctx = FrobeniusContext(alg, 2)

        for m in range(3):
            for n in range(3 - m):
                assert ctx.multiplicative_on(m, n)

    def test_xi_image_is_twisted_power(self, alg_cycf3):
        """(x + xi)^p - x^p = xi^(p) at q-characteristic p."""
        assert FrobeniusContext(alg_cycf3).xi_image() == twisted_power(alg_cycf3, 3)

    def test_adapted(self, alg_cycf3):
        assert FrobeniusContext(alg_cycf3).is_adapted(6)

    def test_frobenius_on_coefficients(self, alg_zt):
        """F*_R twists t -> t^p and is multiplicative."""
        ctx = FrobeniusContext(alg_zt, 2)
        src = ctx.source_algebra
        q = alg_zt.q
        a = AElem.from_coeffs(src, {0: q, 1: 1})
        b = AElem.from_coeffs(src, {1: q ** 2, 2: -1})

        assert ctx.frobenius_on_A(a) == AElem.from_coeffs(alg_zt, {0: q ** 2, 2: 1})
        assert ctx.frobenius_on_A(a * b) == ctx.frobenius_on_A(a) * ctx.frobenius_on_A(b)

    def test_source_elements_only(self, alg_zt):
        ctx = FrobeniusContext(alg_zt, 2)

        with pytest.raises(DescriptorMismatchError):
            ctx.frobenius_linear(alg_zt.x)

    def test_intermediate_precision_rejected(self, alg_zt):
        ctx = FrobeniusContext(alg_zt, 3)

        with pytest.raises(TruncationError):
            ctx.divided_frobenius(ctx.source_ring.basis(1, 2), 4)


@pytest.mark.unit
class TestMixedRing:
    """Test the mixed basis xibar^[k] omega^[n]."""

    @pytest.mark.parametrize("text", ["CycF:2", "CycF:3"])
    def test_roundtrip(self, text):
        ctx = FrobeniusContext(TwistedAlgebra.polynomial(RingDescriptor.parse(text)))
        p = ctx.p

        for n in range(3):
            for k in range(p):
                if k + p * n > 6:
                    continue
                basis = MixedElem.basis(ctx.algebra, p, k, n)
                assert divided_to_mixed(ctx, mixed_to_divided(ctx, basis, 6)) == basis
                assert preserves_filtration(ctx, k, n, 6)

    def test_index_bound(self, alg_cycf2):
        with pytest.raises(PreconditionError):
            MixedElem.basis(alg_cycf2, 2, 2, 0)

    def test_needs_q_characteristic(self, alg_zt):
        ctx = FrobeniusContext(alg_zt, 2)

        with pytest.raises(PreconditionError):
            mixed_to_divided(ctx, MixedElem.basis(alg_zt, 2, 0, 1))

    def test_precision_too_low(self, alg_cycf2):
        ctx = FrobeniusContext(alg_cycf2)

        with pytest.raises(TruncationError):
            mixed_to_divided(ctx, MixedElem.basis(alg_cycf2, 2, 1, 2), 4)
