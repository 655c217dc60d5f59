import pytest

from floercalc.errors import FalsificationError
from floercalc.floerring import (
    GENUS2_LOCAL_IDEALS,
    GENUS3_LOCAL_IDEALS,
    GENUS3_LOCAL_IDEALS_CORRECTED,
    build_quotient,
    candidate_triple,
    gamma_kernel,
    gamma_nilpotency_index,
    joint_spectrum,
    local_decomposition,
    verify_example_decomposition,
)
from floercalc.poly import ALPHA, BETA, GAMMA
from floercalc.scalars import GaussianRational, Matrix, ONE, ZERO


def gr(re, im=0):
    return GaussianRational(re, im)


class TestQuotientAlgebra:
    def test_genus_one_operators(self):
        a = build_quotient(1)
        assert a.dim == 1
        assert a.m_alpha == Matrix([[0]])
        assert a.m_beta == Matrix([[8]])
        assert a.m_gamma == Matrix([[0]])

    def test_genus_two_alpha_column(self):
        # alpha * alpha reduces to 8 - beta in the basis {1, a, b, c}
        a = build_quotient(2)
        assert a.dim == 4
        assert a.m_alpha.column(1) == (gr(8), ZERO, gr(-1), ZERO)

    def test_operators_commute(self):
        for g in range(1, 5):
            a = build_quotient(g)
            for x, y in (
                (a.m_alpha, a.m_beta),
                (a.m_alpha, a.m_gamma),
                (a.m_beta, a.m_gamma),
            ):
                assert (x * y - y * x).is_zero()

    def test_operator_matches_normal_form_products(self):
        a = build_quotient(3)
        for mono_index, mono in enumerate(a.basis):
            from floercalc.poly import Polynomial

            column = a.m_beta.column(mono_index)
            assert column == a.coords(BETA * Polynomial.term(1, mono))

    def test_multiply_vector(self):
        a = build_quotient(2)
        one = a.coords(ALPHA * 0 + 1)
        assert a.multiply_vector(ALPHA, one) == a.coords(ALPHA)


class TestJointSpectrum:
    def test_genus_one(self):
        spec = joint_spectrum(build_quotient(1))
        assert spec == [((ZERO, gr(8), ZERO), 1)]

    def test_genus_two(self):
        spec = {
            tuple(str(e) for e in eig): d
            for eig, d in joint_spectrum(build_quotient(2))
        }
        assert spec == {
            ("0", "8", "0"): 2,
            ("4", "-8", "0"): 1,
            ("-4", "-8", "0"): 1,
        }

    def test_genus_three(self):
        spec = {
            tuple(str(e) for e in eig): d
            for eig, d in joint_spectrum(build_quotient(3))
        }
        assert spec == {
            ("0", "8", "0"): 4,
            ("4", "-8", "0"): 2,
            ("-4", "-8", "0"): 2,
            ("8i", "8", "0"): 1,
            ("-8i", "8", "0"): 1,
        }

    def test_candidate_triples(self):
        lam, mu, nu = candidate_triple(2)
        assert (str(lam), str(mu), str(nu)) == ("8i", "8", "0")
        lam, mu, nu = candidate_triple(-1)
        assert (str(lam), str(mu), str(nu)) == ("-4", "-8", "0")

    def test_all_candidates_realized_up_to_genus_six(self):
        for g in range(1, 7):
            spec = joint_spectrum(build_quotient(g))
            assert len(spec) == 2 * g - 1
            assert all(dim > 0 for _, dim in spec)

    def test_dimensions_sum_to_quotient_dimension(self):
        for g in range(1, 7):
            a = build_quotient(g)
            assert sum(d for _, d in joint_spectrum(a)) == a.dim


class TestLocalDecomposition:
    def test_genus_one(self):
        report = local_decomposition(build_quotient(1))
        assert [s.dimension for s in report.summands] == [1]
        assert report.certified

    def test_genus_two_dimensions(self):
        report = local_decomposition(build_quotient(2))
        assert [s.dimension for s in report.summands] == [1, 2, 1]

    def test_genus_three_dimensions(self):
        report = local_decomposition(build_quotient(3))
        assert [s.dimension for s in report.summands] == [1, 2, 4, 2, 1]

    def test_summands_are_operator_invariant(self):
        a = build_quotient(3)
        report = local_decomposition(a)
        for s in report.summands:
            columns = Matrix.from_columns(list(s.basis), rows=a.dim)
            for op in (a.m_alpha, a.m_beta, a.m_gamma):
                image = op * columns
                stacked = Matrix.from_columns(
                    [columns.column(j) for j in range(columns.cols)]
                    + [image.column(j) for j in range(image.cols)],
                    rows=a.dim,
                )
                assert stacked.rank() == s.dimension

    def test_basis_vectors_normalized(self):
        report = local_decomposition(build_quotient(3))
        for s in report.summands:
            for v in s.basis:
                first = next(x for x in v if x)
                assert first == ONE

    def test_generalized_eigenvectors_annihilated(self):
        a = build_quotient(2)
        report = local_decomposition(a)
        identity = Matrix.identity(a.dim)
        for s in report.summands:
            lam, mu, _ = s.eigenvalues
            shifted = (a.m_alpha - identity.scale(lam)).power(a.dim)
            for v in s.basis:
                assert all(not x for x in shifted.apply(v))

    def test_json_shape(self):
        data = local_decomposition(build_quotient(2)).to_json()
        assert data["genus"] == 2
        assert data["certified"] is True
        assert [s["dim"] for s in data["summands"]] == [1, 2, 1]
        assert data["summands"][0]["eig"] == [["-4", "0"], ["-8", "0"], ["0", "0"]]


class TestGammaStructure:
    def test_nilpotency_indices(self):
        assert gamma_nilpotency_index(build_quotient(1)) == 1
        assert gamma_nilpotency_index(build_quotient(2)) == 2

    def test_nilpotency_bounded_by_genus(self):
        for g in range(1, 6):
            assert gamma_nilpotency_index(build_quotient(g)) <= g

    def test_kernel_genus_one(self):
        dim, _ = gamma_kernel(build_quotient(1))
        assert dim == 1

    def test_kernel_genus_two(self):
        a = build_quotient(2)
        dim, basis = gamma_kernel(a)
        assert dim == 3
        # the images of the genus-1 relations alpha, beta-8, gamma span it
        expected = [a.coords(p) for p in (ALPHA, BETA - 8, GAMMA)]
        combined = Matrix.from_columns(list(basis) + expected, rows=a.dim)
        assert combined.rank() == 3

    def test_kernel_dimension_formula(self):
        from math import comb

        for g in range(2, 6):
            dim, _ = gamma_kernel(build_quotient(g))
            assert dim == comb(g + 2, 3) - comb(g + 1, 3)


class TestExampleDecompositions:
    def test_genus_two_display_certifies(self):
        assert verify_example_decomposition(2)

    def test_genus_two_perturbed_ideal_fails(self):
        perturbed = (
            (ALPHA - 5, BETA + 8, GAMMA),
            GENUS2_LOCAL_IDEALS[1],
            GENUS2_LOCAL_IDEALS[2],
        )
        assert not verify_example_decomposition(2, perturbed)

    def test_genus_three_display_is_erroneous(self):
        # the displayed dim-2 ideals do not contain the relation ideal;
        # this reproduces the erratum rather than hiding it
        assert not verify_example_decomposition(3, GENUS3_LOCAL_IDEALS)

    def test_genus_three_corrected_presentation_certifies(self):
        assert verify_example_decomposition(3, GENUS3_LOCAL_IDEALS_CORRECTED)

    def test_corrected_ideals_localize_the_displayed_eigenvalues(self):
        # eigenvalue triples of the corrected list agree with the spectrum
        from floercalc.groebner import buchberger, ideal_contains

        report = local_decomposition(build_quotient(3))
        # the display lists summands from index +2 down to -2
        for summand, gens in zip(
            report.summands, reversed(GENUS3_LOCAL_IDEALS_CORRECTED)
        ):
            lam, mu, _ = summand.eigenvalues
            basis = buchberger(list(gens))
            # alpha - lam and beta - mu are nilpotent modulo the local ideal
            n = summand.dimension
            assert ideal_contains(basis, (ALPHA - lam) ** n)
            assert ideal_contains(basis, (BETA - mu) ** n)
