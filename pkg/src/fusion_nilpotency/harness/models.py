"""
Report models for the theorem harness.

The mathematical objects are dataclasses; everything that leaves the
process (stdout tables, --json files) goes through these pydantic models
so the output schema stays stable. See docs/report_schema.md.
"""

import json
from enum import Enum

from pydantic import BaseModel, Field

# =============================================================================
# VERDICTS
# =============================================================================


class Verdict(str, Enum):
    """Outcome of checking the vanishing criterion on one module up to the degree cap"""

    HOLDS = "holds"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"
    ERROR = "error"


class ReportStatus(str, Enum):
    OK = "ok"
    INCONSISTENT = "inconsistent"
    INCONCLUSIVE = "inconclusive"


# =============================================================================
# OUTPUT MODELS
# =============================================================================


class ReportModel(BaseModel):
    """Base for models written to stdout or --json"""

    def to_json(self) -> str:
        """Deterministic JSON: sorted keys, no timestamps"""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


class NilpotencyVerdicts(ReportModel):
    """The four independent answers to 'is F nilpotent'"""

    fusion_comparison: bool = Field(..., description="Hom_F(P,S) = Hom_S(P,S), all P")
    hyperfocal: bool = Field(..., description="hyp(F) = 1")
    p_prime_closure: bool = Field(..., description="p'-elements of G form a subgroup")
    frobenius: bool = Field(..., description="every N_G(Q)/C_G(Q) is a p-group")
    witness: str | None = Field(
        default=None, description="A morphism of F not realized inside S, if any"
    )

    @property
    def agree(self) -> bool:
        answers = {
            self.fusion_comparison,
            self.hyperfocal,
            self.p_prime_closure,
            self.frobenius,
        }
        return len(answers) == 1

    @property
    def nilpotent(self) -> bool:
        return self.fusion_comparison


class ModuleRow(BaseModel):
    """Cohomology table for one battery module"""

    module_id: str = Field(..., description="Position in the battery, M0, M1, ...")
    name: str
    dim: int
    f_invariant: bool
    fusion_compatible: bool
    compatibility_witness: str | None = None
    degree_cap: int | None = Field(
        default=None, description="Highest degree actually computed"
    )
    ambient_dims: list[int] = Field(
        default_factory=list, description="dim H^n(S;M), n = 0..cap"
    )
    stable_dims: list[int] = Field(
        default_factory=list, description="dim H^n(F^c;M), n = 0..cap"
    )
    all_subgroup_dims: list[int] | None = Field(
        default=None, description="dim H^n(F;M) over all P <= S (F-invariant M)"
    )
    verdict: Verdict
    witness: list[int] | None = Field(
        default=None, description="(m, n) with H^m(F^c;M) = 0 and H^n(F^c;M) != 0"
    )
    note: str | None = None


class KeyStepResult(BaseModel):
    """H^1(F^c; F_p[S/hyp(F)]) = 0"""

    module_name: str
    dim: int
    verdict: Verdict
    stable_dims: list[int] = Field(default_factory=list)
    witness: str | None = None
    note: str | None = None


class DirectCheck(BaseModel):
    """Stable elements against the bar complex of the whole group, trivial F_p"""

    degree_cap: int
    stable_dims: list[int]
    direct_dims: list[int]

    @property
    def agree(self) -> bool:
        return self.stable_dims == self.direct_dims


class TheoremReport(ReportModel):
    """Empirical check of 'F nilpotent iff the vanishing criterion' on one instance"""

    group: str
    group_order: int
    p: int
    sylow_order: int
    foc_order: int
    hyp_order: int
    group_foc_order: int = Field(..., description="|S ∩ [G,G]|")
    group_hyp_order: int = Field(..., description="|S ∩ O^p(G)|")
    centric_classes: int
    n_max: int
    battery: str = Field(..., description="'default' or 'files'")
    nilpotency: NilpotencyVerdicts
    modules: list[ModuleRow] = Field(default_factory=list)
    key_step: KeyStepResult
    direct_check: DirectCheck | None = None
    status: ReportStatus
    exit_code: int
    notes: list[str] = Field(default_factory=list)


class SurveyRow(BaseModel):
    instance: str
    group: str
    p: int
    expected: dict
    observed: dict
    mismatches: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


class SurveyReport(ReportModel):
    rows: list[SurveyRow] = Field(default_factory=list)
    passed: bool
    exit_code: int


class CentricClassRow(BaseModel):
    """One F-conjugacy class of subgroups of S"""

    representative: str
    order: int
    size: int = Field(..., description="Number of subgroups in the class")
    centric: bool
    automizer_order: int = Field(..., description="|Aut_F(P)| for the representative")
    witness: str | None = Field(
        default=None, description="Q in the class and an element of C_S(Q) outside Q"
    )


class GroupInfo(ReportModel):
    group: str
    group_order: int
    p: int
    sylow_order: int
    sylow_generators: list[str]
    subgroup_count: int
    foc_order: int
    hyp_order: int
    group_foc_order: int
    group_hyp_order: int
    classes: list[CentricClassRow] = Field(default_factory=list)


class CohomologyTable(ReportModel):
    """dim of one family of cohomology spaces for n = 0..n_max"""

    group: str
    p: int
    module: str
    kind: str = Field(..., description="ambient, direct, stable or stable_all")
    dims: list[int]
