"""Strongly cyclic covers of prime-degree cyclic curves, in exact arithmetic."""

from .covers import (
    CoverSpec,
    IsoClass,
    all_covers,
    count_by_support_oracle,
    count_formula_corrected,
    count_formula_paper,
    cover_genus,
    covers_by_quotient_genus,
    intermediate_quotients,
    iso_classes,
    isomorphic_as_covers,
    paper_iso_related,
    support,
)
from .curves import (
    CyclicCurve,
    RamificationProfile,
    base_genus,
    curve_from_json,
    expected_branch_count,
    genus_from_profile,
    ramification_profile,
    standard_curve,
    validate_curve,
)
from .equations import (
    base_equation,
    coordinate_change,
    cover_equations,
    rational_cover_from_factors,
    two_point_transform,
    verify_two_point_identity,
)
from .ff_linear import (
    ExponentVector,
    coset_canonical,
    degree_sum_residue,
    enumerate_degree_zero,
    linear_combine,
    reduce,
    span_membership,
)
from .polynomial import Polynomial, RationalFunction

__version__ = "0.1.0"
