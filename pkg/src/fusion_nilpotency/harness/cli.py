"""
Command-line interface.

    fusion-nilpotency info GROUP -p P
    fusion-nilpotency nilpotency GROUP -p P
    fusion-nilpotency cohomology GROUP -p P [-m MODULE] [-n N] [--direct]
    fusion-nilpotency stable GROUP -p P [-m MODULE] [-n N] [--all-subgroups]
    fusion-nilpotency theorem GROUP -p P [--battery default|FILE...] [-n N]
    fusion-nilpotency survey [--catalog PATH] [--instance NAME...]
    fusion-nilpotency --seed-catalog

GROUP is a group file or catalog shorthand such as symmetric:4 or
cyclic:2*symmetric:3. Exit codes: 0 ok, 1 inconsistent, 2 inconclusive
(including an exhausted memory budget), 64 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog

from ..cohomology.spaces import cohomology, group_cohomology_direct
from ..cohomology.stable import StableElementCalculator
from ..config import CATALOG_FILE, COHOMOLOGY_CONFIG, DEFAULT_LIMITS, HARNESS_CONFIG, Limits
from ..errors import (
    BudgetExceededError,
    FusionNilpotencyError,
    IncompatibleModuleError,
    InternalConsistencyError,
)
from ..fusion.system import (
    FusionSystem,
    build_fusion_system,
    centric_subgroups,
    focal_subgroup,
    group_focal_subgroup,
    group_hyperfocal_subgroup,
    hyperfocal_subgroup,
)
from ..groups.catalog import catalog_listing
from ..groups.core import Group
from ..groups.io import load_group
from ..logging_setup import configure_logging
from ..modules.fpmodule import FpModule, trivial_module
from ..modules.io import parse_module_file
from .models import (
    CentricClassRow,
    CohomologyTable,
    GroupInfo,
    ReportModel,
    TheoremReport,
)
from .survey import run_survey
from .theorem import format_witness, nilpotency_verdicts, run_theorem_check

logger = structlog.get_logger(__name__)

EXIT_CODES = HARNESS_CONFIG["exit_codes"]


class UsageError(FusionNilpotencyError):
    """Bad command-line arguments"""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


# =============================================================================
# PARSER
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-mb", type=int, help="Memory budget for cochain matrices")
    common.add_argument("--order-cap", type=int, help="Largest group order to enumerate")
    common.add_argument("--subgroup-cap", type=int, help="Largest |S| for subgroup enumeration")
    common.add_argument("--json", metavar="PATH", help="Write the report as JSON ('-' = stdout)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("group", help="Group file or catalog shorthand")
    instance.add_argument("-p", type=int, required=True, help="The prime")

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument(
        "-n", "--n-max", type=int, default=COHOMOLOGY_CONFIG["n_max"], help="Degree cap"
    )

    parser = _ArgumentParser(
        prog="fusion-nilpotency",
        description="Fusion systems, stable-element cohomology and nilpotency checks.",
    )
    parser.add_argument(
        "--seed-catalog", action="store_true", help="List the built-in catalog groups"
    )
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)

    sub.add_parser("info", parents=[common, instance], help="Orders, foc, hyp, centric classes")
    sub.add_parser("nilpotency", parents=[common, instance], help="The four nilpotency tests")

    coh = sub.add_parser(
        "cohomology", parents=[common, instance, degree], help="dim H^n(S;M)"
    )
    coh.add_argument("-m", "--module", help="Module file for S (default trivial F_p)")
    coh.add_argument("--direct", action="store_true", help="H^n(G;F_p) over the whole group")

    stable = sub.add_parser(
        "stable", parents=[common, instance, degree], help="dim H^n(F^c;M)"
    )
    stable.add_argument("-m", "--module", help="Module file for S (default trivial F_p)")
    stable.add_argument(
        "--all-subgroups", action="store_true", help="Stability over every P <= S"
    )

    theorem = sub.add_parser(
        "theorem", parents=[common, instance, degree], help="Full nilpotency/criterion check"
    )
    theorem.add_argument(
        "--battery", nargs="+", default=["default"], metavar="default|FILE",
        help="'default' or module files for S",
    )
    theorem.add_argument(
        "--direct", action="store_true", help="Cross-check with H^*(G;F_p) by brute force"
    )
    theorem.add_argument("--workers", type=int, help="Thread pool size")

    survey = sub.add_parser("survey", parents=[common], help="Check the shipped catalog")
    survey.add_argument("--catalog", default=str(CATALOG_FILE), help="Catalog YAML")
    survey.add_argument("--instance", nargs="+", help="Only these instance names")
    survey.add_argument("--workers", type=int, help="Thread pool size")
    return parser


# =============================================================================
# OUTPUT
# =============================================================================


def _emit(report: ReportModel, args: argparse.Namespace, text: str) -> None:
    if args.json == "-":
        sys.stdout.write(report.to_json())
        return
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    sys.stdout.write(text.rstrip("\n") + "\n")


def _limits(args: argparse.Namespace) -> Limits:
    return DEFAULT_LIMITS.with_overrides(
        order_cap=args.order_cap,
        subgroup_cap=args.subgroup_cap,
        budget_mb=args.budget_mb,
    )


def _load(args: argparse.Namespace, limits: Limits) -> tuple[Group, FusionSystem]:
    G = load_group(args.group, limits)
    return G, build_fusion_system(G, args.p, limits)


def _module(args: argparse.Namespace, F: FusionSystem) -> FpModule:
    if args.module:
        return parse_module_file(args.module, F.S, F.p)
    return trivial_module(F.S, F.p)


def _dims_line(label: str, dims: Sequence[int]) -> str:
    return f"{label:<22}" + " ".join(f"{d:>4}" for d in dims)


# =============================================================================
# COMMANDS
# =============================================================================


def cmd_info(args: argparse.Namespace, limits: Limits) -> int:
    G, F = _load(args, limits)
    rows = []
    for flag in centric_subgroups(F):
        P = flag.representative
        witness = None
        if flag.witness is not None:
            Q, x = flag.witness
            witness = f"Q={Q.label()} x={G.describe(x)}"
        rows.append(
            CentricClassRow(
                representative=P.label(),
                order=P.order,
                size=len(flag.members),
                centric=flag.centric,
                automizer_order=F.automizer(P).order,
                witness=witness,
            )
        )
    info = GroupInfo(
        group=G.name,
        group_order=G.order,
        p=F.p,
        sylow_order=F.S.order,
        sylow_generators=[G.describe(x) for x in F.S.canonical_generators],
        subgroup_count=len(F.subgroups),
        foc_order=focal_subgroup(F).order,
        hyp_order=hyperfocal_subgroup(F).order,
        group_foc_order=group_focal_subgroup(F).order,
        group_hyp_order=group_hyperfocal_subgroup(F).order,
        classes=rows,
    )
    lines = [
        f"group        {info.group} (order {info.group_order}), p = {info.p}",
        f"sylow        order {info.sylow_order}, generators {', '.join(info.sylow_generators)}",
        f"subgroups    {info.subgroup_count} subgroups of S",
        f"foc(F)       order {info.foc_order}   (S ∩ [G,G]: {info.group_foc_order})",
        f"hyp(F)       order {info.hyp_order}   (S ∩ O^p(G): {info.group_hyp_order})",
        "classes      order size centric |Aut_F(P)| representative",
    ]
    lines.extend(
        f"             {r.order:>5} {r.size:>4} {('yes' if r.centric else 'no'):>7}"
        f" {r.automizer_order:>10} {r.representative}"
        for r in rows
    )
    _emit(info, args, "\n".join(lines))
    return EXIT_CODES["ok"]


def cmd_nilpotency(args: argparse.Namespace, limits: Limits) -> int:
    _, F = _load(args, limits)
    verdicts = nilpotency_verdicts(F, limits)
    lines = [
        f"fusion comparison   {verdicts.fusion_comparison}",
        f"hyp(F) = 1          {verdicts.hyperfocal}",
        f"p'-closure          {verdicts.p_prime_closure}",
        f"Frobenius           {verdicts.frobenius}",
    ]
    if verdicts.witness:
        lines.append(f"witness             {verdicts.witness}")
    lines.append(f"agree               {verdicts.agree}")
    _emit(verdicts, args, "\n".join(lines))
    return EXIT_CODES["ok"] if verdicts.agree else EXIT_CODES["inconsistent"]


def cmd_cohomology(args: argparse.Namespace, limits: Limits) -> int:
    G, F = _load(args, limits)
    if args.direct:
        if args.module:
            raise UsageError("--direct uses the trivial module; drop -m")
        M = trivial_module(G.whole(), F.p)
        dims = [group_cohomology_direct(G, M, n, limits).dim for n in range(args.n_max + 1)]
        kind = "direct"
    else:
        M = _module(args, F)
        dims = [cohomology(F.S, M, n, limits).dim for n in range(args.n_max + 1)]
        kind = "ambient"
    table = CohomologyTable(group=G.name, p=F.p, module=M.name, kind=kind, dims=dims)
    label = f"H^n({'G' if args.direct else 'S'};{M.name})"
    text = "\n".join(
        [_dims_line("n", range(args.n_max + 1)), _dims_line(label, dims)]
    )
    _emit(table, args, text)
    return EXIT_CODES["ok"]


def cmd_stable(args: argparse.Namespace, limits: Limits) -> int:
    G, F = _load(args, limits)
    M = _module(args, F)
    calc = StableElementCalculator(F, M, args.n_max, limits)
    if args.all_subgroups:
        dims = [calc.stable_elements_all_subgroups(n).dim for n in range(args.n_max + 1)]
        kind, label = "stable_all", f"H^n(F;{M.name})"
    else:
        dims = [calc.stable_elements(n).dim for n in range(args.n_max + 1)]
        kind, label = "stable", f"H^n(F^c;{M.name})"
    ambient = [calc.ambient(n).dim for n in range(args.n_max + 1)]
    table = CohomologyTable(group=G.name, p=F.p, module=M.name, kind=kind, dims=dims)
    text = "\n".join(
        [
            _dims_line("n", range(args.n_max + 1)),
            _dims_line(f"H^n(S;{M.name})", ambient),
            _dims_line(label, dims),
        ]
    )
    _emit(table, args, text)
    return EXIT_CODES["ok"]


def _theorem_text(report: TheoremReport) -> str:
    v = report.nilpotency
    lines = [
        f"{report.group} (order {report.group_order}), p = {report.p}, |S| = {report.sylow_order}",
        f"|foc| = {report.foc_order}, |hyp| = {report.hyp_order}, "
        f"centric classes = {report.centric_classes}",
        f"nilpotent: fusion={v.fusion_comparison} hyp={v.hyperfocal} "
        f"closure={v.p_prime_closure} frobenius={v.frobenius}",
        "",
        f"{'id':<4} {'module':<14} {'dim':>3} {'compat':>6}  {'H^n(S;M)':<22} "
        f"{'H^n(F^c;M)':<22} verdict",
    ]
    for row in report.modules:
        ambient = ",".join(str(d) for d in row.ambient_dims) or "-"
        stable = ",".join(str(d) for d in row.stable_dims) or "-"
        verdict = row.verdict.value
        if row.witness:
            verdict += f" (m={row.witness[0]}, n={row.witness[1]})"
        lines.append(
            f"{row.module_id:<4} {row.name:<14} {row.dim:>3} "
            f"{('yes' if row.fusion_compatible else 'no'):>6}  {ambient:<22} {stable:<22} {verdict}"
        )
    key = report.key_step
    dims = ",".join(str(d) for d in key.stable_dims) or "-"
    lines.extend(["", f"key step {key.module_name}: {key.verdict.value} (dims {dims})"])
    if report.direct_check is not None:
        dc = report.direct_check
        lines.append(f"direct H^*(G;F_p) {dc.direct_dims} vs stable {dc.stable_dims}")
    lines.extend(f"note: {note}" for note in report.notes)
    marker = {"ok": "✅", "inconsistent": "❌", "inconclusive": "⚠️"}[report.status.value]
    lines.append(f"{marker} status: {report.status.value}")
    return "\n".join(lines)


def cmd_theorem(args: argparse.Namespace, limits: Limits) -> int:
    battery = args.battery
    if battery == ["default"]:
        sources = None
    elif "default" in battery:
        raise UsageError("--battery takes either 'default' or module files")
    else:
        sources = battery
    report = run_theorem_check(
        args.group,
        args.p,
        module_sources=sources,
        n_max=args.n_max,
        limits=limits,
        direct=args.direct,
        max_workers=args.workers,
    )
    _emit(report, args, _theorem_text(report))
    return report.exit_code


def cmd_survey(args: argparse.Namespace, limits: Limits) -> int:
    report = run_survey(args.catalog, limits, names=args.instance, max_workers=args.workers)
    lines = []
    for row in report.rows:
        status = "✅ ok" if row.passed else "❌ MISMATCH"
        lines.append(f"{row.instance:<12} {row.group:<24} p={row.p:<3} {status}")
        lines.extend(f"    {problem}" for problem in row.mismatches)
    lines.append(f"{'✅' if report.passed else '❌'} passed: {report.passed}")
    _emit(report, args, "\n".join(lines))
    return report.exit_code


COMMANDS = {
    "info": cmd_info,
    "nilpotency": cmd_nilpotency,
    "cohomology": cmd_cohomology,
    "stable": cmd_stable,
    "theorem": cmd_theorem,
    "survey": cmd_survey,
}


def _log_level(verbose: int) -> str | None:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return None


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"fusion-nilpotency: error: {exc}", file=sys.stderr)
        return EXIT_CODES["usage"]

    if args.seed_catalog:
        print("\n".join(catalog_listing()))
        return EXIT_CODES["ok"]
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_CODES["usage"]

    configure_logging(_log_level(args.verbose))
    try:
        return COMMANDS[args.command](args, _limits(args))
    except BudgetExceededError as exc:
        print(f"fusion-nilpotency: {exc}", file=sys.stderr)
        return EXIT_CODES["inconclusive"]
    except InternalConsistencyError as exc:
        logger.error("internal consistency failure", error=str(exc))
        print(f"fusion-nilpotency: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_CODES["inconsistent"]
    except IncompatibleModuleError as exc:
        print(f"fusion-nilpotency: {exc}", file=sys.stderr)
        if exc.witness is not None:
            G = exc.witness[0].parent
            print(f"  witness: {format_witness(G, exc.witness)}", file=sys.stderr)
        return EXIT_CODES["usage"]
    except (FusionNilpotencyError, OSError, ValueError) as exc:
        print(f"fusion-nilpotency: error: {exc}", file=sys.stderr)
        return EXIT_CODES["usage"]


if __name__ == "__main__":
    sys.exit(main())
