"""
Finite groups: closure, conjugacy classes, subgroup lattices, genus spectra.
"""

from groups.model import GroupModel, generate_group
from groups.classes import ConjClassData, conjugacy_data, class_fusion
from groups.subgroups import (
    SubgroupClass,
    subgroup_lattice,
    subgroup_classes,
    maximal_subgroup_classes,
    transitive_action_sizes,
    doubly_transitive_sizes,
    curve_orbit_lengths,
    subgroup_order_obstruction,
)
from groups.hurwitz import (
    Signature,
    hurwitz_min_genus,
    signatures,
    genus_spectrum,
    admissible_signatures,
    min_orbit_length,
)
from groups.library import catalogue, get_group, group_spec

__all__ = [
    "GroupModel",
    "generate_group",
    "ConjClassData",
    "conjugacy_data",
    "class_fusion",
    "SubgroupClass",
    "subgroup_lattice",
    "subgroup_classes",
    "maximal_subgroup_classes",
    "transitive_action_sizes",
    "doubly_transitive_sizes",
    "curve_orbit_lengths",
    "subgroup_order_obstruction",
    "Signature",
    "hurwitz_min_genus",
    "signatures",
    "genus_spectrum",
    "admissible_signatures",
    "min_orbit_length",
    "catalogue",
    "get_group",
    "group_spec",
]
