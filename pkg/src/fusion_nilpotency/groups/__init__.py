"""
Finite-group arithmetic: tables, subgroups, Sylow subgroups, quotients
"""

from .catalog import (
    CATALOG,
    alternating,
    catalog_listing,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    group_from_catalog,
    parse_catalog_spec,
    quaternion,
    semidirect_cyclic,
    special_linear_2_3,
    symmetric,
)
from .core import (
    Group,
    GroupHom,
    Permutation,
    Quotient,
    Subgroup,
    all_subgroups,
    center,
    centralizer,
    derived_subgroup,
    format_cycles,
    group_from_generators,
    group_from_table,
    is_p_power,
    is_prime,
    normalizer,
    o_p_residual,
    p_part,
    quotient_group,
    sylow_subgroup,
)
from .io import load_group, parse_cycles, parse_group_file, parse_group_text

__all__ = [
    "CATALOG",
    "Group",
    "GroupHom",
    "Permutation",
    "Quotient",
    "Subgroup",
    "all_subgroups",
    "alternating",
    "catalog_listing",
    "center",
    "centralizer",
    "cyclic",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "format_cycles",
    "group_from_catalog",
    "group_from_generators",
    "group_from_table",
    "is_p_power",
    "is_prime",
    "load_group",
    "normalizer",
    "o_p_residual",
    "p_part",
    "parse_catalog_spec",
    "parse_cycles",
    "parse_group_file",
    "parse_group_text",
    "quaternion",
    "quotient_group",
    "semidirect_cyclic",
    "special_linear_2_3",
    "sylow_subgroup",
    "symmetric",
]
