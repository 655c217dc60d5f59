import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from floercalc.errors import InfiniteQuotientError
from floercalc.groebner import (
    buchberger,
    comaximal,
    ideal_contains,
    ideal_equal,
    normal_form,
    quotient_dimension,
    s_polynomial,
    standard_monomials,
)
from floercalc.poly import ALPHA, BETA, GAMMA, Monomial, Polynomial

J2_GENERATORS = [ALPHA**2 + BETA - 8, ALPHA * BETA + 8 * ALPHA + GAMMA, ALPHA * GAMMA]


@pytest.fixture(scope="module")
def gb_j2():
    return buchberger(J2_GENERATORS)


class TestBuchberger:
    def test_already_reduced_basis_is_fixed(self):
        gens = [ALPHA, BETA - 8, GAMMA]
        assert list(buchberger(gens).generators) == gens

    def test_unit_ideal(self):
        gb = buchberger([Polynomial.constant(1)])
        assert gb.is_unit

    def test_genus2_standard_monomials(self, gb_j2):
        # dimension 4 is forced by the binomial count C(4,3); membership of
        # 1, alpha, beta, gamma checked by hand against the leading terms
        sm = standard_monomials(gb_j2)
        assert sm == [
            Monomial(0, 0, 0),
            Monomial(1, 0, 0),
            Monomial(0, 1, 0),
            Monomial(0, 0, 1),
        ]

    def test_genus2_reduced_basis_keeps_the_generators(self, gb_j2):
        for g in J2_GENERATORS:
            assert g in gb_j2.generators

    def test_idempotent(self, gb_j2):
        assert buchberger(list(gb_j2.generators)) == gb_j2

    def test_every_s_polynomial_reduces_to_zero(self, gb_j2):
        # the defining property of a Groebner basis, checked directly
        gens = gb_j2.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                s = s_polynomial(gens[i], gens[j])
                assert normal_form(s, gb_j2).is_zero

    def test_zero_generators_dropped(self):
        assert buchberger([Polynomial.zero(), ALPHA]).generators == (ALPHA,)

    def test_all_zero_generators_give_zero_ideal(self):
        gb = buchberger([Polynomial.zero()])
        assert gb.is_zero_ideal

    @given(
        st.tuples(
            st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)
        )
    )
    @settings(max_examples=25, deadline=None)
    def test_canonicity_under_regeneration(self, coeffs):
        # adding polynomial combinations of generators cannot change the
        # reduced basis
        c1, c2, c3 = coeffs
        g1, g2, g3 = J2_GENERATORS
        regenerated = [
            g1 + c1 * ALPHA * g2,
            g2 + c2 * g3,
            g3 + c3 * BETA * g1,
            g1,
        ]
        assert buchberger(regenerated) == buchberger(J2_GENERATORS)


class TestNormalForm:
    def test_alpha_squared(self, gb_j2):
        # alpha^2 + beta - 8 is a generator, so alpha^2 reduces to 8 - beta
        assert normal_form(ALPHA**2, gb_j2) == 8 - BETA

    def test_zero(self, gb_j2):
        assert normal_form(Polynomial.zero(), gb_j2).is_zero

    def test_gamma_squared_vanishes(self, gb_j2):
        assert normal_form(GAMMA**2, gb_j2).is_zero

    def test_linear_over_scalars(self, gb_j2):
        p, q = ALPHA**3, BETA * GAMMA
        lhs = normal_form(3 * p - 2 * q, gb_j2)
        rhs = 3 * normal_form(p, gb_j2) - 2 * normal_form(q, gb_j2)
        assert lhs == rhs

    @given(
        st.lists(
            st.tuples(
                st.integers(0, 2), st.integers(0, 2), st.integers(0, 1),
                st.integers(-4, 4),
            ),
            max_size=3,
        ),
        st.lists(
            st.tuples(
                st.integers(0, 2), st.integers(0, 2), st.integers(0, 1),
                st.integers(-4, 4),
            ),
            max_size=3,
        ),
    )
    @settings(max_examples=30, deadline=None)
    def test_multiplicative_compatibility(self, terms_p, terms_q):
        gb = buchberger(J2_GENERATORS)
        p = Polynomial({Monomial(a, b, c): v for a, b, c, v in terms_p})
        q = Polynomial({Monomial(a, b, c): v for a, b, c, v in terms_q})
        lhs = normal_form(p * q, gb)
        rhs = normal_form(normal_form(p, gb) * normal_form(q, gb), gb)
        assert lhs == rhs


class TestIdealPredicates:
    def test_contains_generator(self, gb_j2):
        assert ideal_contains(gb_j2, ALPHA * GAMMA)

    def test_does_not_contain_standard_monomial(self, gb_j2):
        assert not ideal_contains(gb_j2, ALPHA)

    def test_contains_zero(self, gb_j2):
        assert ideal_contains(gb_j2, Polynomial.zero())

    def test_ideal_equal_canonical(self):
        assert not ideal_equal(
            buchberger([Polynomial.constant(1)]), buchberger([ALPHA])
        )

    def test_comaximal_distinct_points(self):
        a = buchberger([ALPHA - 4, BETA + 8, GAMMA])
        b = buchberger([ALPHA + 4, BETA + 8, GAMMA])
        assert comaximal(a, b)

    def test_not_comaximal_with_common_zero(self):
        assert not comaximal(buchberger([ALPHA]), buchberger([ALPHA, BETA]))

    def test_comaximal_fat_point(self):
        a = buchberger([ALPHA**2, BETA - 8, GAMMA + 16 * ALPHA])
        b = buchberger([ALPHA - 4, BETA + 8, GAMMA])
        assert comaximal(a, b)


class TestStandardMonomials:
    def test_point_ideal(self):
        gb = buchberger([ALPHA, BETA - 8, GAMMA])
        assert standard_monomials(gb) == [Monomial(0, 0, 0)]
        assert quotient_dimension(gb) == 1

    def test_unit_ideal_has_no_standard_monomials(self):
        assert standard_monomials(buchberger([Polynomial.constant(2)])) == []

    def test_zero_ideal_is_infinite_dimensional(self):
        with pytest.raises(InfiniteQuotientError):
            standard_monomials(buchberger([Polynomial.zero()]))

    def test_positive_dimensional_ideal_rejected(self):
        with pytest.raises(InfiniteQuotientError):
            standard_monomials(buchberger([ALPHA]))

    def test_fat_point_dimensions(self):
        gb = buchberger([ALPHA**2, BETA - 8, GAMMA + 16 * ALPHA])
        assert quotient_dimension(gb) == 2
