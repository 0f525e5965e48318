"""
Theorem harness: F is nilpotent iff the vanishing criterion holds.

The vanishing criterion: if H^m(F^c;M) = 0 for some m > 0 then H^n(F^c;M) = 0 for
every n > 0, for all fusion-compatible M. Only degrees up to a cap can be
checked, so each module gets a three-valued verdict and a non-nilpotent
instance without a witness in the battery is reported as inconclusive.
"""

from __future__ import annotations

import contextvars
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path

import structlog

from ..cohomology.bar import estimate_payload_bytes
from ..cohomology.spaces import group_cohomology_direct
from ..cohomology.stable import StableElementCalculator
from ..config import COHOMOLOGY_CONFIG, DEFAULT_LIMITS, HARNESS_CONFIG, Limits
from ..errors import BudgetExceededError
from ..fusion.system import (
    FusionSystem,
    build_fusion_system,
    centric_subgroups,
    focal_subgroup,
    group_focal_subgroup,
    group_hyperfocal_subgroup,
    hyperfocal_subgroup,
    is_nilpotent,
)
from ..groups.core import Group, GroupHom, Subgroup
from ..groups.io import load_group
from ..modules.fpmodule import (
    FpModule,
    one_dimensional_modules,
    regular_quotient_module,
    trivial_module,
)
from ..modules.io import parse_module_file
from ..modules.validation import is_F_invariant, is_fusion_compatible
from .models import (
    DirectCheck,
    KeyStepResult,
    ModuleRow,
    NilpotencyVerdicts,
    ReportStatus,
    TheoremReport,
    Verdict,
)
from .oracles import p_nilpotent_closure, p_nilpotent_frobenius

logger = structlog.get_logger(__name__)

EXIT_CODES = HARNESS_CONFIG["exit_codes"]


# =============================================================================
# FORMATTING
# =============================================================================


def format_morphism(group: Group, phi: GroupHom) -> str:
    """phi on the canonical generators of its domain"""
    pairs = (
        f"{group.describe(x)}->{group.describe(phi(x))}"
        for x in phi.domain.canonical_generators
    )
    return "{" + ", ".join(pairs) + "}"


def format_witness(group: Group, witness: tuple[Subgroup, GroupHom, int]) -> str:
    P, phi, x = witness
    return (
        f"P={P.label()} phi={format_morphism(group, phi)} "
        f"x={group.describe(x)} phi(x)={group.describe(phi(x))}"
    )


# =============================================================================
# BATTERY AND DEGREE CAPS
# =============================================================================


def default_battery(F: FusionSystem) -> list[FpModule]:
    """
    Trivial F_p, F_p[S/foc], F_p[S/hyp] and every character of S/foc.

    Modules with the same action are kept once, first name wins.
    """
    S, p = F.S, F.p
    foc = focal_subgroup(F)
    hyp = hyperfocal_subgroup(F)
    candidates = [
        trivial_module(S, p),
        regular_quotient_module(S, foc, p, name=f"F_{p}[S/foc]"),
        regular_quotient_module(S, hyp, p, name=f"F_{p}[S/hyp]"),
        *one_dimensional_modules(S, foc, p),
    ]
    seen = set()
    battery = []
    for M in candidates:
        key = M.signature()
        if key not in seen:
            seen.add(key)
            battery.append(M)
    return battery


def load_battery(F: FusionSystem, sources: Sequence[str | Path]) -> list[FpModule]:
    return [parse_module_file(source, F.S, F.p) for source in sources]


def affordable_degree(order: int, dim: int, n_max: int, limits: Limits) -> int:
    """Largest n <= n_max whose cochain complex fits the memory budget, or -1"""
    n = n_max
    while n >= 0 and estimate_payload_bytes(order, n, dim) > limits.budget_bytes:
        n -= 1
    return n


def statement_two_witness(dims: Sequence[int]) -> tuple[int, int] | None:
    """(m, n) with dims[m] = 0 and dims[n] != 0, m, n >= 1, both minimal"""
    zeros = [n for n in range(1, len(dims)) if dims[n] == 0]
    nonzeros = [n for n in range(1, len(dims)) if dims[n] != 0]
    if zeros and nonzeros:
        return (zeros[0], nonzeros[0])
    return None


# =============================================================================
# VANISHING CRITERION SCAN
# =============================================================================


def _scan_module(
    F: FusionSystem, module_id: str, M: FpModule, n_max: int, limits: Limits
) -> ModuleRow:
    invariant = is_F_invariant(M, F)
    compatible = is_fusion_compatible(M, F)
    base = {
        "module_id": module_id,
        "name": M.name,
        "dim": M.dim,
        "f_invariant": invariant.ok,
        "fusion_compatible": compatible.ok,
    }
    if not compatible:
        return ModuleRow(
            **base,
            compatibility_witness=format_witness(F.group, compatible.witness),
            verdict=Verdict.SKIPPED,
        )

    cap = affordable_degree(F.S.order, M.dim, n_max, limits)
    if cap < 1:
        return ModuleRow(
            **base,
            verdict=Verdict.ERROR,
            note="memory budget does not allow degree 1",
        )
    try:
        calc = StableElementCalculator(F, M, cap, limits)
        ambient = [calc.ambient(n).dim for n in range(cap + 1)]
        stable = [calc.stable_elements(n).dim for n in range(cap + 1)]
        all_subgroups = (
            [calc.stable_elements_all_subgroups(n).dim for n in range(cap + 1)]
            if invariant
            else None
        )
    except BudgetExceededError as exc:
        logger.warning("module scan over budget", module=M.name, error=str(exc))
        return ModuleRow(**base, verdict=Verdict.ERROR, note=str(exc))

    witness = statement_two_witness(stable)
    logger.info("scanned module", module=M.name, stable=stable, ambient=ambient)
    return ModuleRow(
        **base,
        degree_cap=cap,
        ambient_dims=ambient,
        stable_dims=stable,
        all_subgroup_dims=all_subgroups,
        verdict=Verdict.VIOLATED if witness else Verdict.HOLDS,
        witness=list(witness) if witness else None,
        note=f"degrees capped at {cap} by the memory budget" if cap < n_max else None,
    )


def criterion_two_scan(
    F: FusionSystem,
    modules: Sequence[FpModule],
    n_max: int | None = None,
    limits: Limits = DEFAULT_LIMITS,
    max_workers: int | None = None,
) -> list[ModuleRow]:
    """
    Check the vanishing criterion on every module of a battery.

    Args:
        F: The fusion system
        modules: Modules for F.S; incompatible ones come back SKIPPED
        n_max: Degree cap
        limits: Memory budget; over-budget modules come back ERROR
        max_workers: Thread pool size

    Returns:
        One ModuleRow per module, in battery order
    """
    n_max = COHOMOLOGY_CONFIG["n_max"] if n_max is None else n_max
    workers = max_workers or HARNESS_CONFIG["max_workers"]
    rows: dict[int, ModuleRow] = {}
    with ThreadPoolExecutor(max_workers=max(1, min(len(modules), workers))) as executor:
        future_to_index = {
            # each task runs in its own copy of the caller's context (bound log fields)
            executor.submit(
                contextvars.copy_context().run, _scan_module, F, f"M{i}", M, n_max, limits
            ): i
            for i, M in enumerate(modules)
        }
        for future in as_completed(future_to_index):
            rows[future_to_index[future]] = future.result()
    return [rows[i] for i in sorted(rows)]


# =============================================================================
# KEY STEP
# =============================================================================


def key_step_check(
    F: FusionSystem, n_max: int | None = None, limits: Limits = DEFAULT_LIMITS
) -> KeyStepResult:
    """H^1(F^c; F_p[S/hyp(F)]) = 0, when that module is fusion compatible"""
    n_max = COHOMOLOGY_CONFIG["n_max"] if n_max is None else n_max
    hyp = hyperfocal_subgroup(F)
    M = regular_quotient_module(F.S, hyp, F.p, name=f"F_{F.p}[S/hyp]")
    compatible = is_fusion_compatible(M, F)
    if not compatible:
        return KeyStepResult(
            module_name=M.name,
            dim=M.dim,
            verdict=Verdict.SKIPPED,
            witness=format_witness(F.group, compatible.witness),
        )
    cap = affordable_degree(F.S.order, M.dim, max(n_max, 1), limits)
    if cap < 1:
        return KeyStepResult(
            module_name=M.name,
            dim=M.dim,
            verdict=Verdict.ERROR,
            note="memory budget does not allow degree 1",
        )
    calc = StableElementCalculator(F, M, cap, limits)
    dims = [calc.stable_elements(n).dim for n in range(cap + 1)]
    verdict = Verdict.HOLDS if dims[1] == 0 else Verdict.VIOLATED
    if verdict is Verdict.VIOLATED:
        logger.error("key step fails", module=M.name, dims=dims)
    return KeyStepResult(
        module_name=M.name, dim=M.dim, verdict=verdict, stable_dims=dims
    )


# =============================================================================
# FULL CHECK
# =============================================================================


def nilpotency_verdicts(
    F: FusionSystem, limits: Limits = DEFAULT_LIMITS
) -> NilpotencyVerdicts:
    certificate = is_nilpotent(F)
    witness = None
    if certificate.witness is not None:
        P, phi = certificate.witness
        witness = f"P={P.label()} phi={format_morphism(F.group, phi)}"
    return NilpotencyVerdicts(
        fusion_comparison=certificate.nilpotent,
        hyperfocal=hyperfocal_subgroup(F).is_trivial,
        p_prime_closure=p_nilpotent_closure(F.group, F.p),
        frobenius=p_nilpotent_frobenius(F.group, F.p, limits),
        witness=witness,
    )


def _direct_check(F: FusionSystem, n_max: int, limits: Limits) -> DirectCheck | None:
    """Stable elements against H^n(G;F_p), trivial module, within the budget"""
    cap = affordable_degree(F.group.order, 1, n_max, limits)
    if cap < 0:
        return None
    M_S = trivial_module(F.S, F.p)
    M_G = trivial_module(F.group.whole(), F.p)
    calc = StableElementCalculator(F, M_S, cap, limits)
    return DirectCheck(
        degree_cap=cap,
        stable_dims=[calc.stable_elements(n).dim for n in range(cap + 1)],
        direct_dims=[
            group_cohomology_direct(F.group, M_G, n, limits).dim for n in range(cap + 1)
        ],
    )


def _consistency_notes(
    F: FusionSystem,
    verdicts: NilpotencyVerdicts,
    foc: Subgroup,
    hyp: Subgroup,
    rows: Sequence[ModuleRow],
    key_step: KeyStepResult,
    direct: DirectCheck | None,
    battery: Sequence[FpModule],
) -> list[str]:
    problems = []
    if not verdicts.agree:
        problems.append("nilpotency methods disagree")
    if foc != group_focal_subgroup(F):
        problems.append("foc(F) differs from S ∩ [G,G]")
    if hyp != group_hyperfocal_subgroup(F):
        problems.append("hyp(F) differs from S ∩ O^p(G)")
    if key_step.verdict is Verdict.VIOLATED:
        problems.append("key step: H^1(F^c; F_p[S/hyp]) is nonzero")
    if direct is not None and not direct.agree:
        problems.append("stable elements disagree with H^*(G; F_p)")
    for row, M in zip(rows, battery):
        if row.verdict not in (Verdict.HOLDS, Verdict.VIOLATED):
            continue
        if verdicts.nilpotent and row.stable_dims != row.ambient_dims:
            problems.append(f"{row.module_id}: F nilpotent but H^*(F^c) != H^*(S)")
        if verdicts.nilpotent and row.verdict is Verdict.VIOLATED:
            problems.append(f"{row.module_id}: vanishing criterion violated on a nilpotent F")
        if (
            M.is_trivial
            and row.all_subgroup_dims is not None
            and row.all_subgroup_dims != row.stable_dims
        ):
            problems.append(f"{row.module_id}: centric and all-subgroup dims differ")
    return problems


def run_theorem_check(
    group: Group | str,
    p: int,
    module_sources: Sequence[str | Path] | None = None,
    n_max: int | None = None,
    limits: Limits = DEFAULT_LIMITS,
    direct: bool = False,
    max_workers: int | None = None,
) -> TheoremReport:
    """
    Run the full check on one (G, p).

    Args:
        group: A Group, a group file path or catalog shorthand
        p: The prime
        module_sources: Module files for S; the default battery when None
        n_max: Degree cap
        limits: Size caps and memory budget
        direct: Also compare with the bar complex of all of G (trivial F_p)
        max_workers: Thread pool size for the module scan

    Returns:
        TheoremReport whose exit_code is 0 (consistent, prediction holds),
        1 (inconsistent) or 2 (no witness within bounds)
    """
    n_max = COHOMOLOGY_CONFIG["n_max"] if n_max is None else n_max
    G = group if isinstance(group, Group) else load_group(group, limits)
    F = build_fusion_system(G, p, limits)
    structlog.contextvars.bind_contextvars(group=G.name, p=p)
    try:
        foc = focal_subgroup(F)
        hyp = hyperfocal_subgroup(F)
        verdicts = nilpotency_verdicts(F, limits)
        battery = (
            default_battery(F)
            if module_sources is None
            else load_battery(F, module_sources)
        )
        rows = criterion_two_scan(F, battery, n_max, limits, max_workers)
        key_step = key_step_check(F, n_max, limits)
        direct_check = _direct_check(F, n_max, limits) if direct else None
    finally:
        structlog.contextvars.unbind_contextvars("group", "p")

    notes = _consistency_notes(
        F, verdicts, foc, hyp, rows, key_step, direct_check, battery
    )
    if notes:
        status = ReportStatus.INCONSISTENT
    elif not verdicts.nilpotent and Verdict.VIOLATED not in {r.verdict for r in rows}:
        status = ReportStatus.INCONCLUSIVE
        notes.append("no witness within degree/battery bounds")
    else:
        status = ReportStatus.OK
    notes.extend(
        f"{row.module_id} skipped: not fusion compatible"
        for row in rows
        if row.verdict is Verdict.SKIPPED
    )
    return TheoremReport(
        group=G.name,
        group_order=G.order,
        p=p,
        sylow_order=F.S.order,
        foc_order=foc.order,
        hyp_order=hyp.order,
        group_foc_order=group_focal_subgroup(F).order,
        group_hyp_order=group_hyperfocal_subgroup(F).order,
        centric_classes=sum(1 for flag in centric_subgroups(F) if flag.centric),
        n_max=n_max,
        battery="default" if module_sources is None else "files",
        nilpotency=verdicts,
        modules=rows,
        key_step=key_step,
        direct_check=direct_check,
        status=status,
        exit_code=EXIT_CODES[status.value],
        notes=notes,
    )
