"""Argumentation-based checking and explanation of makespan schedules.

The package turns an instance plus any proposed schedule into one of three
attack graphs (feasibility, optimality, fixed decisions), verifies the
schedule's argument set for stability, and renders the findings as short
template sentences or machine-readable reports.
"""

from .af import (
    AFKind,
    Arg,
    ArgFramework,
    attacks_within,
    enumerate_stable,
    is_conflict_free,
    is_stable,
    unattacked_by,
)
from .budgets import (
    BUDGET_ENV_VAR,
    DEFAULT_ASSIGNMENT_BUDGET,
    DEFAULT_EXTENSION_BUDGET,
    resolve_budget,
)
from .builders import (
    build_feasibility_af,
    build_fixed_decision_af,
    build_optimality_af,
    extension_to_schedule,
    schedule_to_extension,
)
from .errors import BoundsError, BudgetExceededError, MembershipError
from .jsonio import (
    af_to_doc,
    certificate_to_doc,
    decisions_from_doc,
    decisions_to_doc,
    explanation_to_doc,
    instance_from_doc,
    instance_to_doc,
    report_to_doc,
    schedule_from_doc,
    schedule_to_doc,
)
from .explain import (
    Certificate,
    Dimension,
    Explanation,
    ExplanationReport,
    Form,
    attack_explanations,
    explain_schedule,
    non_attack_explanations,
    render_text,
)
from .scheduling import (
    FixedDecisions,
    Instance,
    Schedule,
    ScheduleMetrics,
    check_pairs,
    compute_metrics,
    is_feasible,
    pep_violations,
    satisfies_fixed,
    sep_violations,
)
from .session import (
    Session,
    SessionStore,
    apply_disturbance,
    create_session,
    export_session,
    get_af,
    import_session,
    propose,
)
from .solvers import exact_optimal, lpt_schedule

__version__ = "0.1.0"

__all__ = [
    "AFKind",
    "Arg",
    "ArgFramework",
    "BoundsError",
    "BudgetExceededError",
    "BUDGET_ENV_VAR",
    "Certificate",
    "DEFAULT_ASSIGNMENT_BUDGET",
    "DEFAULT_EXTENSION_BUDGET",
    "Dimension",
    "Explanation",
    "ExplanationReport",
    "FixedDecisions",
    "Form",
    "Instance",
    "MembershipError",
    "Schedule",
    "ScheduleMetrics",
    "Session",
    "SessionStore",
    "af_to_doc",
    "apply_disturbance",
    "attack_explanations",
    "attacks_within",
    "build_feasibility_af",
    "build_fixed_decision_af",
    "build_optimality_af",
    "certificate_to_doc",
    "check_pairs",
    "compute_metrics",
    "create_session",
    "decisions_from_doc",
    "decisions_to_doc",
    "enumerate_stable",
    "exact_optimal",
    "explain_schedule",
    "explanation_to_doc",
    "export_session",
    "extension_to_schedule",
    "get_af",
    "import_session",
    "instance_from_doc",
    "instance_to_doc",
    "is_conflict_free",
    "is_feasible",
    "is_stable",
    "lpt_schedule",
    "non_attack_explanations",
    "pep_violations",
    "propose",
    "render_text",
    "report_to_doc",
    "resolve_budget",
    "satisfies_fixed",
    "schedule_from_doc",
    "schedule_to_doc",
    "schedule_to_extension",
    "sep_violations",
    "unattacked_by",
]
