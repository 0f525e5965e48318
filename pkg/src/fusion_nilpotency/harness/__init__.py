"""
Nilpotency oracles, the criterion scan, the catalog survey and the CLI
"""

from .models import (
    CentricClassRow,
    CohomologyTable,
    DirectCheck,
    GroupInfo,
    KeyStepResult,
    ModuleRow,
    NilpotencyVerdicts,
    ReportStatus,
    SurveyReport,
    SurveyRow,
    TheoremReport,
    Verdict,
)
from .oracles import p_complement, p_nilpotent_closure, p_nilpotent_frobenius
from .survey import load_catalog, run_survey, survey_instance
from .theorem import (
    affordable_degree,
    criterion_two_scan,
    default_battery,
    key_step_check,
    nilpotency_verdicts,
    run_theorem_check,
    statement_two_witness,
)

__all__ = [
    "CentricClassRow",
    "CohomologyTable",
    "DirectCheck",
    "GroupInfo",
    "KeyStepResult",
    "ModuleRow",
    "NilpotencyVerdicts",
    "ReportStatus",
    "SurveyReport",
    "SurveyRow",
    "TheoremReport",
    "Verdict",
    "affordable_degree",
    "criterion_two_scan",
    "default_battery",
    "key_step_check",
    "load_catalog",
    "nilpotency_verdicts",
    "p_complement",
    "p_nilpotent_closure",
    "p_nilpotent_frobenius",
    "run_survey",
    "run_theorem_check",
    "statement_two_witness",
    "survey_instance",
]
