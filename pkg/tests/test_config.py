"""
Tests for resource limits
"""

import pytest

from fusion_nilpotency.config import DEFAULT_LIMITS, HARNESS_CONFIG, Limits


@pytest.mark.unit
def test_with_overrides_keeps_unset_fields():
    limits = Limits(order_cap=100, subgroup_cap=16, budget_mb=8)
    changed = limits.with_overrides(budget_mb=2)
    assert changed == Limits(order_cap=100, subgroup_cap=16, budget_mb=2)
    assert limits.with_overrides() == limits
    assert DEFAULT_LIMITS.with_overrides(order_cap=None) == DEFAULT_LIMITS


@pytest.mark.unit
def test_budget_bytes():
    assert Limits(budget_mb=3).budget_bytes == 3 * 1024 * 1024


@pytest.mark.unit
def test_exit_codes():
    assert HARNESS_CONFIG["exit_codes"] == {
        "ok": 0,
        "inconsistent": 1,
        "inconclusive": 2,
        "usage": 64,
    }
