"""
fusion_nilpotency: fusion systems of finite groups, twisted cohomology by
stable elements, and an empirical check of the cohomological criterion
for nilpotency of a fusion system.
"""

from .config import DEFAULT_LIMITS, Limits
from .errors import FusionNilpotencyError
from .logging_setup import configure_library_logging

configure_library_logging()

__version__ = "0.1.0"

__all__ = ["DEFAULT_LIMITS", "FusionNilpotencyError", "Limits", "__version__"]
