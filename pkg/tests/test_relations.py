import pytest

from floercalc.errors import FalsificationError
from floercalc.groebner import (
    buchberger,
    ideal_contains,
    ideal_equal,
    quotient_dimension,
)
from floercalc.poly import ALPHA, BETA, GAMMA, P_ONE, Polynomial
from floercalc.relations import (
    classical_closed_forms_hold,
    classical_ideal,
    classical_triple,
    classical_zeta,
    deformed_zeta,
    degenerate_triple,
    floer_ideal,
    floer_triple,
    gamma_power_in_ideal,
    recover_recursion_constants,
    verify_alpha_chain_closed_form,
    verify_beta_product_membership,
    verify_deformation_shape,
    verify_inclusions,
)


class TestClassicalChain:
    def test_first_entries(self):
        assert classical_zeta(0) == P_ONE
        assert classical_zeta(1) == ALPHA

    def test_one_recursion_step(self):
        assert classical_zeta(2) == ALPHA**2 + BETA

    def test_two_recursion_steps(self):
        assert classical_zeta(3) == ALPHA**3 + 5 * ALPHA * BETA + 4 * GAMMA

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            classical_zeta(-1)


class TestClassicalTriple:
    def test_base(self):
        assert classical_triple(1).polys == (ALPHA, BETA, GAMMA)

    def test_one_step_first_component(self):
        assert classical_triple(2).r1 == ALPHA**2 + BETA

    def test_first_component_equals_chain(self):
        for g in range(1, 9):
            assert classical_triple(g).r1 == classical_zeta(g)

    def test_closed_forms(self):
        for g in range(1, 9):
            assert classical_closed_forms_hold(g)

    def test_real_coefficients(self):
        for g in range(1, 9):
            for p in classical_triple(g).polys:
                assert p.has_real_coefficients()


class TestDeformedChain:
    def test_first_entries(self):
        assert deformed_zeta(0) == P_ONE
        assert deformed_zeta(1) == ALPHA

    def test_alternating_sign_step(self):
        assert deformed_zeta(2) == ALPHA**2 + BETA - 8

    def test_two_steps(self):
        assert deformed_zeta(3) == ALPHA**3 + 5 * ALPHA * BETA + 24 * ALPHA + 4 * GAMMA


class TestFloerTriple:
    def test_genus_one(self):
        assert floer_triple(1).polys == (ALPHA, BETA - 8, GAMMA)

    def test_genus_two(self):
        assert floer_triple(2).polys == (
            ALPHA**2 + BETA - 8,
            ALPHA * BETA + 8 * ALPHA + GAMMA,
            ALPHA * GAMMA,
        )

    def test_genus_three_first_component(self):
        assert (
            floer_triple(3).r1
            == ALPHA**3 + 5 * ALPHA * BETA + 24 * ALPHA + 4 * GAMMA
        )

    def test_first_component_is_deformed_chain(self):
        for g in range(1, 9):
            assert floer_triple(g).r1 == deformed_zeta(g)

    def test_leading_degrees(self):
        for g in range(1, 9):
            t = floer_triple(g)
            assert [p.weighted_degree() for p in t.polys] == [
                2 * g,
                2 * g + 2,
                2 * g + 4,
            ]

    def test_degeneration_reproduces_classical(self):
        # the deformed recursion with the shift turned off must agree with
        # the independently implemented classical recursion
        for g in range(1, 9):
            assert degenerate_triple(g).polys == classical_triple(g).polys


class TestIdeals:
    def test_genus_zero_is_unit_ideal(self):
        assert floer_ideal(0).basis.is_unit

    def test_quotient_dimensions(self):
        dims = [quotient_dimension(floer_ideal(g).basis) for g in range(1, 7)]
        assert dims == [1, 4, 10, 20, 35, 56]

    def test_floer_ideal_equals_chain_ideal(self):
        for g in range(1, 6):
            chain = buchberger(
                [deformed_zeta(g), deformed_zeta(g + 1), deformed_zeta(g + 2)]
            )
            assert ideal_equal(floer_ideal(g).basis, chain)

    def test_classical_ideal_equals_chain_ideal(self):
        for g in range(1, 7):
            chain = buchberger(
                [
                    classical_zeta(g),
                    classical_zeta(g + 1),
                    classical_zeta(g + 2),
                ]
            )
            assert ideal_equal(classical_ideal(g).basis, chain)

    def test_strict_descending_chain(self):
        for g in range(1, 6):
            inner = quotient_dimension(floer_ideal(g + 1).basis)
            outer = quotient_dimension(floer_ideal(g).basis)
            assert inner > outer


class TestStructuralChecks:
    def test_deformation_shape(self):
        for g in range(1, 9):
            assert verify_deformation_shape(g)

    def test_inclusions(self):
        for g in range(1, 5):
            assert verify_inclusions(g)

    def test_gamma_power(self):
        for g in range(1, 7):
            assert gamma_power_in_ideal(g)

    def test_beta_product_membership(self):
        for g in range(1, 7):
            assert verify_beta_product_membership(g)

    def test_alpha_chain_closed_form(self):
        for n in range(1, 9):
            assert verify_alpha_chain_closed_form(n)

    def test_alpha_chain_closed_form_value(self):
        # (alpha^2 + 4^2*16)(alpha^2 + 2^2*16)*alpha expanded by hand
        expected = ALPHA**5 + 320 * ALPHA**3 + 16384 * ALPHA
        assert deformed_zeta(5).specialize(beta=8, gamma=0) == expected


class TestRecursionConstants:
    @pytest.mark.parametrize(
        "g,expected_c", [(1, 8), (2, -8), (3, 8), (4, -8), (5, 8)]
    )
    def test_recovered_constants(self, g, expected_c):
        c, d = recover_recursion_constants(g)
        assert c == expected_c
        assert d == 0

    def test_bad_genus_rejected(self):
        with pytest.raises(ValueError):
            recover_recursion_constants(0)
