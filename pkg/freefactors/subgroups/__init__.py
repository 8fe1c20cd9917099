"""Subgroup calculus over core graphs."""

from freefactors.subgroups.antipodal import antipodal_af, antipodal_of, antipodal_of_fold
from freefactors.subgroups.calculus import (
    apply_automorphism,
    conjugate_into,
    conjugate_subgroup_into,
    contains,
    dist_le2,
    intersect,
    is_basis,
    is_corank1_factor,
    require_nontrivial,
    subgroup_from_graph,
    subgroup_of,
    trivial_subgroup,
    verify_factor,
)
from freefactors.subgroups.models import (
    Corank1Certificate,
    CorankShape,
    FactorWitness,
    Mode,
    SeparatingFactor,
    Subgroup,
)
from freefactors.subgroups.separating import corank1_shape, injrad_growth, separating_factor
from freefactors.subgroups.whitehead import (
    Descent,
    extend_to_basis,
    is_free_factor,
    require_factor,
    standard_factor,
    whitehead_automorphisms,
    whitehead_descent,
)

__all__ = [
    "Corank1Certificate",
    "CorankShape",
    "Descent",
    "FactorWitness",
    "Mode",
    "SeparatingFactor",
    "Subgroup",
    "antipodal_af",
    "antipodal_of",
    "antipodal_of_fold",
    "apply_automorphism",
    "conjugate_into",
    "conjugate_subgroup_into",
    "contains",
    "corank1_shape",
    "dist_le2",
    "extend_to_basis",
    "injrad_growth",
    "intersect",
    "is_basis",
    "is_corank1_factor",
    "is_free_factor",
    "require_factor",
    "require_nontrivial",
    "separating_factor",
    "standard_factor",
    "subgroup_from_graph",
    "subgroup_of",
    "trivial_subgroup",
    "verify_factor",
    "whitehead_automorphisms",
    "whitehead_descent",
]
