"""euclid-kit: the gcd algorithm family in exact arithmetic.

Reciprocal subtraction with traces, Bezout certificates in signed and
non-negative form, the residue-scan modular inverse, full solution families
for two-variable linear equations, continued fractions with convergents,
polynomial gcd over the rationals behind a generic Euclidean-domain
contract, and k-th power rationality tests. Every route is cross-checkable
against the others through the `verify` suite.
"""

from euclid_kit._kernels import BACKEND
from euclid_kit.anthyphairesis import (
    AnthyphairesisTrace,
    Step,
    gcd_anthyphairesis,
    gcd_division,
    quotient_sequence,
    same_ratio,
    subtract_trace,
)
from euclid_kit.continued_fractions import (
    ContinuedFraction,
    Convergent,
    cf_from_rational,
    cf_value,
    convergents,
    interval_quotients,
    lagrange_solution,
)
from euclid_kit.errors import DomainError
from euclid_kit.euclidean_domain import (
    INTEGERS,
    RATIONAL_POLYNOMIALS,
    EuclideanDomainContract,
    Polynomial,
    generic_extended_gcd,
    generic_gcd,
    poly_divmod,
    poly_gcd,
)
from euclid_kit.exact_arith import (
    format_rational,
    integer_kth_root,
    normalize_rational,
    parse_integer,
    parse_rational,
)
from euclid_kit.linear_diophantine import (
    BezoutCertificate,
    EuclidForm,
    SolutionFamily,
    all_solutions_in_box,
    canonicalize,
    euclid_form,
    extended_gcd,
    gauss_inverse,
    ideal_equality_check,
    solve_linear,
)
from euclid_kit.power_rationality import (
    TheoremViolation,
    rational_kth_root,
    reduced_power_check,
)
from euclid_kit.verify import VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "AnthyphairesisTrace",
    "BACKEND",
    "BezoutCertificate",
    "ContinuedFraction",
    "Convergent",
    "DomainError",
    "EuclidForm",
    "EuclideanDomainContract",
    "INTEGERS",
    "Polynomial",
    "RATIONAL_POLYNOMIALS",
    "SolutionFamily",
    "Step",
    "TheoremViolation",
    "VerifyReport",
    "all_solutions_in_box",
    "canonicalize",
    "cf_from_rational",
    "cf_value",
    "convergents",
    "euclid_form",
    "extended_gcd",
    "format_rational",
    "gauss_inverse",
    "gcd_anthyphairesis",
    "gcd_division",
    "generic_extended_gcd",
    "generic_gcd",
    "ideal_equality_check",
    "integer_kth_root",
    "interval_quotients",
    "lagrange_solution",
    "normalize_rational",
    "parse_integer",
    "parse_rational",
    "poly_divmod",
    "poly_gcd",
    "quotient_sequence",
    "rational_kth_root",
    "reduced_power_check",
    "run_verify",
    "same_ratio",
    "solve_linear",
    "subtract_trace",
]
