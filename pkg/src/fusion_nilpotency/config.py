"""
Configuration settings for the fusion nilpotency toolkit

Defaults live in plain dicts; environment variables (optionally from a
.env file) override them, and CLI flags override both through `Limits`.
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value else default


# Group enumeration caps
GROUP_LIMITS = {
    "order_cap": _env_int("FUSION_ORDER_CAP", 20000),
    "subgroup_cap": _env_int("FUSION_SUBGROUP_CAP", 256),
}

# Cohomology engine
COHOMOLOGY_CONFIG = {
    "n_max": _env_int("FUSION_N_MAX", 4),
    "budget_mb": _env_int("FUSION_BUDGET_MB", 512),
    # rough size of one stored sparse entry (key + value + dict slot)
    "bytes_per_entry": 16,
    # dense matrices are used once more than this share of entries is nonzero
    "dense_fill_ratio": 0.25,
}

# Theorem harness
HARNESS_CONFIG = {
    "max_workers": _env_int("FUSION_MAX_WORKERS", 4),
    "exit_codes": {
        "ok": 0,
        "inconsistent": 1,
        "inconclusive": 2,
        "usage": 64,
    },
}

CATALOG_FILE = Path(__file__).parent / "data" / "catalog.yaml"

# Logging configuration
LOGGING_CONFIG = {
    "level": os.getenv("FUSION_LOG_LEVEL", "WARNING"),
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
}


@dataclass(frozen=True)
class Limits:
    """Resource limits threaded through library calls."""

    order_cap: int = GROUP_LIMITS["order_cap"]
    subgroup_cap: int = GROUP_LIMITS["subgroup_cap"]
    budget_mb: int = COHOMOLOGY_CONFIG["budget_mb"]

    @property
    def budget_bytes(self) -> int:
        return self.budget_mb * 1024 * 1024

    def with_overrides(
        self,
        order_cap: int | None = None,
        subgroup_cap: int | None = None,
        budget_mb: int | None = None,
    ) -> "Limits":
        """Return a copy with the given (non-None) fields replaced"""
        changes = {
            key: value
            for key, value in (
                ("order_cap", order_cap),
                ("subgroup_cap", subgroup_cap),
                ("budget_mb", budget_mb),
            )
            if value is not None
        }
        return replace(self, **changes)


DEFAULT_LIMITS = Limits()
