"""Exact computation and verification of the invariant instanton Floer
cohomology ring of a surface times a circle, genus 1 through 8."""

from .errors import FalsificationError, InfiniteQuotientError
from .floerring import (
    DecompositionReport,
    LocalSummand,
    QuotientAlgebra,
    build_quotient,
    gamma_kernel,
    gamma_nilpotency_index,
    joint_spectrum,
    local_decomposition,
    verify_example_decomposition,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    comaximal,
    ideal_contains,
    ideal_equal,
    normal_form,
    quotient_dimension,
    standard_monomials,
)
from .poly import ALPHA, BETA, GAMMA, Monomial, Polynomial
from .relations import (
    IdealFamily,
    RelationTriple,
    classical_ideal,
    classical_triple,
    classical_zeta,
    deformed_zeta,
    floer_ideal,
    floer_triple,
    recover_recursion_constants,
    verify_deformation_shape,
    verify_inclusions,
)
from .scalars import GaussianRational, Matrix, Rational, rational
from .tables import (
    ConjectureReport,
    SpTable,
    conjecture_report,
    primitive_dim,
    sp_table,
    sym_product_dims,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "GAMMA",
    "ConjectureReport",
    "DecompositionReport",
    "FalsificationError",
    "GaussianRational",
    "GroebnerBasis",
    "IdealFamily",
    "InfiniteQuotientError",
    "LocalSummand",
    "Matrix",
    "Monomial",
    "Polynomial",
    "QuotientAlgebra",
    "Rational",
    "RelationTriple",
    "SpTable",
    "buchberger",
    "build_quotient",
    "classical_ideal",
    "classical_triple",
    "classical_zeta",
    "comaximal",
    "conjecture_report",
    "deformed_zeta",
    "floer_ideal",
    "floer_triple",
    "gamma_kernel",
    "gamma_nilpotency_index",
    "ideal_contains",
    "ideal_equal",
    "joint_spectrum",
    "local_decomposition",
    "normal_form",
    "primitive_dim",
    "quotient_dimension",
    "rational",
    "recover_recursion_constants",
    "sp_table",
    "standard_monomials",
    "sym_product_dims",
    "verify_deformation_shape",
    "verify_example_decomposition",
    "verify_inclusions",
]
