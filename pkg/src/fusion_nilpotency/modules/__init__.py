"""
F_p-modules for Sylow subgroups and their validation against a fusion system
"""

from .fpmodule import (
    FpModule,
    one_dimensional_modules,
    pullback_module,
    regular_module,
    regular_quotient_module,
    restrict_module,
    trivial_module,
)
from .io import module_generators, parse_module_file, parse_module_text
from .validation import (
    CheckResult,
    invariant_by_definition,
    invariant_by_focal_subgroup,
    is_F_invariant,
    is_fusion_compatible,
)

__all__ = [
    "CheckResult",
    "FpModule",
    "invariant_by_definition",
    "invariant_by_focal_subgroup",
    "is_F_invariant",
    "is_fusion_compatible",
    "module_generators",
    "one_dimensional_modules",
    "parse_module_file",
    "parse_module_text",
    "pullback_module",
    "regular_module",
    "regular_quotient_module",
    "restrict_module",
    "trivial_module",
]
