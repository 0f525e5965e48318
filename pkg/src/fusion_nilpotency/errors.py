"""
Exception hierarchy for the fusion nilpotency toolkit
"""


class FusionNilpotencyError(Exception):
    """Base class for all toolkit errors"""


class GroupInputError(FusionNilpotencyError, ValueError):
    """A permutation or group description is malformed"""


class GroupSizeError(FusionNilpotencyError):
    """A closure or enumeration exceeded its configured cap"""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.what = what
        self.cap = cap


class CatalogError(FusionNilpotencyError, ValueError):
    """Unknown catalog name or parameter out of range"""


class SubgroupError(FusionNilpotencyError, ValueError):
    """Subgroups with different parents, or a set that is not a subgroup"""


class NotNormalError(FusionNilpotencyError, ValueError):
    """A quotient was requested by a subgroup that is not normal"""


class DimensionMismatchError(FusionNilpotencyError, ValueError):
    """Matrix or subspace dimensions do not line up"""


class NotSubspaceError(FusionNilpotencyError, ValueError):
    """A subspace was required to lie inside another one and does not"""


class ModuleValidationError(FusionNilpotencyError, ValueError):
    """Action matrices do not define a representation"""


class IncompatibleModuleError(FusionNilpotencyError):
    """phi* is not a cochain map for this module and fusion system"""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class BudgetExceededError(FusionNilpotencyError):
    """A cochain computation would exceed the memory budget"""

    def __init__(self, what: str, estimate_bytes: int, budget_bytes: int):
        super().__init__(
            f"{what}: estimated {estimate_bytes / 2**20:.1f} MB exceeds "
            f"budget of {budget_bytes / 2**20:.0f} MB"
        )
        self.what = what
        self.estimate_bytes = estimate_bytes
        self.budget_bytes = budget_bytes


class InternalConsistencyError(FusionNilpotencyError):
    """An invariant that must always hold was violated"""


class InputFormatError(FusionNilpotencyError, ValueError):
    """A group or module file could not be parsed"""

    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line
