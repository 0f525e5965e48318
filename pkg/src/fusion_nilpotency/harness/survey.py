"""
Survey of the shipped catalog: nilpotency agreement, foc/hyp orders and
the key step on every instance, compared against recorded expectations.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Any

import structlog
import yaml

from ..config import CATALOG_FILE, DEFAULT_LIMITS, HARNESS_CONFIG, Limits
from ..errors import CatalogError
from ..fusion.system import (
    build_fusion_system,
    focal_subgroup,
    group_focal_subgroup,
    group_hyperfocal_subgroup,
    hyperfocal_subgroup,
)
from ..groups.catalog import parse_catalog_spec
from .models import SurveyReport, SurveyRow
from .theorem import key_step_check, nilpotency_verdicts

logger = structlog.get_logger(__name__)

EXIT_CODES = HARNESS_CONFIG["exit_codes"]


def load_catalog(path: str | Path = CATALOG_FILE) -> list[dict[str, Any]]:
    """Load the instance list from a catalog YAML file"""
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as file:
            data = yaml.safe_load(file)
    except (OSError, yaml.YAMLError) as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    instances = data.get("instances") if isinstance(data, dict) else None
    if not isinstance(instances, list):
        raise CatalogError(f"{path}: expected a top-level 'instances' list")
    for entry in instances:
        if not isinstance(entry, dict) or not {"name", "group", "p"} <= entry.keys():
            raise CatalogError(f"{path}: every instance needs name, group and p")
    logger.debug("loaded catalog", path=str(path), instances=len(instances))
    return instances


def observe_instance(group_spec: str, p: int, limits: Limits = DEFAULT_LIMITS) -> dict[str, Any]:
    G = parse_catalog_spec(group_spec, limits)
    F = build_fusion_system(G, p, limits)
    verdicts = nilpotency_verdicts(F, limits)
    foc = focal_subgroup(F)
    hyp = hyperfocal_subgroup(F)
    return {
        "order": G.order,
        "sylow_order": F.S.order,
        "foc_order": foc.order,
        "hyp_order": hyp.order,
        "nilpotent": verdicts.nilpotent,
        "methods_agree": verdicts.agree,
        "focal_theorem": foc == group_focal_subgroup(F),
        "hyperfocal_theorem": hyp == group_hyperfocal_subgroup(F),
        "key_step": key_step_check(F, 1, limits).verdict.value,
    }


def survey_instance(entry: dict[str, Any], limits: Limits = DEFAULT_LIMITS) -> SurveyRow:
    observed = observe_instance(str(entry["group"]), int(entry["p"]), limits)
    expected = dict(entry.get("expected") or {})
    mismatches = [
        f"{key}: expected {value!r}, observed {observed.get(key)!r}"
        for key, value in sorted(expected.items())
        if observed.get(key) != value
    ]
    for check in ("methods_agree", "focal_theorem", "hyperfocal_theorem"):
        if not observed[check]:
            mismatches.append(f"{check} failed")
    if observed["key_step"] not in ("holds", "skipped"):
        mismatches.append(f"key step {observed['key_step']}")
    return SurveyRow(
        instance=str(entry["name"]),
        group=str(entry["group"]),
        p=int(entry["p"]),
        expected=expected,
        observed=observed,
        mismatches=mismatches,
    )


def run_survey(
    path: str | Path = CATALOG_FILE,
    limits: Limits = DEFAULT_LIMITS,
    names: Sequence[str] | None = None,
    max_workers: int | None = None,
) -> SurveyReport:
    """
    Survey every (or every named) catalog instance.

    Args:
        path: Catalog YAML
        limits: Size caps and memory budget
        names: Restrict to these instance names
        max_workers: Thread pool size

    Returns:
        SurveyReport, rows in catalog order; exit code 0 when all rows pass
    """
    instances = load_catalog(path)
    if names:
        unknown = set(names) - {entry["name"] for entry in instances}
        if unknown:
            raise CatalogError(f"unknown catalog instances: {', '.join(sorted(unknown))}")
        instances = [entry for entry in instances if entry["name"] in names]

    workers = max_workers or HARNESS_CONFIG["max_workers"]
    rows: dict[int, SurveyRow] = {}
    with ThreadPoolExecutor(max_workers=max(1, min(len(instances), workers))) as executor:
        future_to_index = {
            executor.submit(survey_instance, entry, limits): i
            for i, entry in enumerate(instances)
        }
        for future in as_completed(future_to_index):
            row = future.result()
            rows[future_to_index[future]] = row
            if not row.passed:
                logger.warning("survey mismatch", instance=row.instance, problems=row.mismatches)

    ordered = [rows[i] for i in sorted(rows)]
    passed = all(row.passed for row in ordered)
    return SurveyReport(
        rows=ordered,
        passed=passed,
        exit_code=EXIT_CODES["ok"] if passed else EXIT_CODES["inconsistent"],
    )
