"""Exact arithmetic in skew PBW extensions over algebras of functions on a finite set."""

from .commutant import (
    GradedBasis,
    SubspaceBasis,
    center_condition_quasicomm,
    center_direct,
    centralizer_kernel,
    centralizer_sep_basis,
    leading_coefficient_filter,
    rational_kernel,
)
from .errors import (
    DimensionError,
    ParseError,
    PreconditionError,
    PresentationError,
    PresentationMismatch,
    SkewPBWError,
    UndefinedError,
    UnsupportedMethod,
)
from .funalg import (
    AlgebraElement,
    Permutation,
    SigmaDerivation,
    apply_sigma_alpha,
    derivation_apply,
    induced_automorphism,
    per_set,
    sep_set,
)
from .multiindex import MultiIndex, deglex_compare
from .pbw_core import (
    PBWElement,
    Presentation,
    Remainder,
    associativity_check,
    leading_term,
    monomial_commute,
    monomial_commute_scalar,
    mul,
    scalar_times,
)
from .piecewise import IntervalPermutation, Partition, PiecewiseFunction, gamma, mu, mu_inverse, sep_intervals, translate_centralizer

__version__ = "0.1.0"
