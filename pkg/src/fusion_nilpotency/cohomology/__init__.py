"""
Twisted group cohomology by the normalized bar complex, and stable elements
"""

from .bar import CochainComplex, build_cochain_complex, estimate_payload_bytes
from .spaces import (
    CohomologySpace,
    cohomology,
    cohomology_from_complex,
    group_cohomology_direct,
)
from .stable import (
    StableElementCalculator,
    phi_star,
    restriction_map,
    stable_elements,
    stable_elements_all_subgroups,
)

__all__ = [
    "CochainComplex",
    "CohomologySpace",
    "StableElementCalculator",
    "build_cochain_complex",
    "cohomology",
    "cohomology_from_complex",
    "estimate_payload_bytes",
    "group_cohomology_direct",
    "phi_star",
    "restriction_map",
    "stable_elements",
    "stable_elements_all_subgroups",
]
