"""Apartments of the free factor complexes and the structures they carry."""

from freefactors.complex.apartments import (
    antipodal,
    antipodal_faces_check,
    apartment_from_assignment,
    is_adjacent,
    is_standard_af,
    nielsen_adjacent,
    non_antipodal_apartment,
    standard_apartment,
    unspanned_apartment,
    verify_apartment,
)
from freefactors.complex.endgame import (
    Midpoint,
    Overlap,
    classify,
    midpoints,
    nielsen_pair,
    one_off_check,
    overlap_report,
)
from freefactors.complex.export import cube_to_dot, to_dot
from freefactors.complex.fakes import (
    FakeFamily,
    bridge_complement,
    bridge_generators,
    fake_family,
    twisted_apartment,
    twisted_apartment_report,
)
from freefactors.complex.models import (
    Apartment,
    FactorVertex,
    LoopSearch,
    Snop,
    SnopCube,
    Stick,
    Superstick,
    Verdict,
    proper_subsets,
    realize,
)
from freefactors.complex.recognition import (
    barycentre_generation_check,
    buildup_conditions,
    face_verdict,
    of3_report,
    of3_standardness,
    potential_stick_search,
    restrict_to_face,
    verdict_of,
)
from freefactors.complex.sticks import (
    all_sticks,
    bonded_triples,
    carried,
    iota_action_check,
    signed_permutation_action,
    snops,
    stick_characterization_check,
    stick_classes,
    stick_orbits,
    sticks_of,
    superstick_as_intersection,
    superstick_characterization_check,
    superstick_listing_discrepancies,
    supersticks,
    two_sphere,
)

__all__ = [
    "Apartment",
    "FactorVertex",
    "FakeFamily",
    "LoopSearch",
    "Midpoint",
    "Overlap",
    "Snop",
    "SnopCube",
    "Stick",
    "Superstick",
    "Verdict",
    "all_sticks",
    "antipodal",
    "antipodal_faces_check",
    "apartment_from_assignment",
    "barycentre_generation_check",
    "bonded_triples",
    "bridge_complement",
    "bridge_generators",
    "buildup_conditions",
    "carried",
    "classify",
    "cube_to_dot",
    "face_verdict",
    "fake_family",
    "iota_action_check",
    "is_adjacent",
    "is_standard_af",
    "midpoints",
    "nielsen_adjacent",
    "nielsen_pair",
    "non_antipodal_apartment",
    "of3_report",
    "of3_standardness",
    "one_off_check",
    "overlap_report",
    "potential_stick_search",
    "proper_subsets",
    "realize",
    "restrict_to_face",
    "signed_permutation_action",
    "snops",
    "standard_apartment",
    "stick_characterization_check",
    "stick_classes",
    "stick_orbits",
    "sticks_of",
    "superstick_as_intersection",
    "superstick_characterization_check",
    "superstick_listing_discrepancies",
    "supersticks",
    "to_dot",
    "twisted_apartment",
    "twisted_apartment_report",
    "two_sphere",
    "unspanned_apartment",
    "verdict_of",
    "verify_apartment",
]
