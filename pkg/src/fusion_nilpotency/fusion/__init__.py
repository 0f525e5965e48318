"""
Fusion systems F_S(G): Hom-sets, conjugacy classes, centrics, foc and hyp
"""

from .system import (
    FCentricFlag,
    FusionSystem,
    NilpotencyCertificate,
    build_fusion_system,
    centric_members,
    centric_subgroups,
    f_conjugacy_classes,
    focal_subgroup,
    group_focal_subgroup,
    group_hyperfocal_subgroup,
    hom_set,
    hyperfocal_subgroup,
    is_centric,
    is_nilpotent,
)

__all__ = [
    "FCentricFlag",
    "FusionSystem",
    "NilpotencyCertificate",
    "build_fusion_system",
    "centric_members",
    "centric_subgroups",
    "f_conjugacy_classes",
    "focal_subgroup",
    "group_focal_subgroup",
    "group_hyperfocal_subgroup",
    "hom_set",
    "hyperfocal_subgroup",
    "is_centric",
    "is_nilpotent",
]
