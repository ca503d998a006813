"""Per-dimension findings for a schedule: attack and non-attack witnesses,
rendered sentences, and stable-extension certificates."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .af import AFKind, Arg, is_stable
from .builders import (
    build_feasibility_af,
    build_fixed_decision_af,
    build_optimality_af,
    schedule_to_extension,
)
from .scheduling import (
    FixedDecisions,
    Instance,
    Pair,
    Schedule,
    is_feasible,
    pep_violations,
    satisfies_fixed,
    sep_violations,
)


class Dimension(str, enum.Enum):
    FEASIBILITY = "feasibility"
    EFFICIENCY = "efficiency"
    FIXED = "fixed"


class Form(str, enum.Enum):
    ATTACK = "attack"
    NON_ATTACK = "non_attack"


_DIMENSION_RANK = {Dimension.FEASIBILITY: 0, Dimension.EFFICIENCY: 1, Dimension.FIXED: 2}
_FORM_RANK = {Form.ATTACK: 0, Form.NON_ATTACK: 1}


@dataclass(frozen=True)
class Explanation:
    """One finding: an attack inside the extension, or a non-attack out of it.

    `attacker` is None exactly for the non-attack form (the extension as a
    whole is the non-attacking side).  `detail` spells the finding out in
    plain indices, e.g. the improving swap behind an efficiency attack.
    """

    dimension: Dimension
    form: Form
    target: Arg
    attacker: Arg | None = None
    detail: Mapping[str, int] = field(default_factory=dict)

    @property
    def text(self) -> str:
        return render_text(self)


def _sort_key(x: Explanation):
    return (
        _DIMENSION_RANK[x.dimension],
        _FORM_RANK[x.form],
        x.attacker if x.attacker is not None else Arg(0, 0),
        x.target,
        tuple(sorted(x.detail.items())),
    )


def render_text(x: Explanation) -> str:
    """The finding as one template sentence (ASCII arrows)."""
    t = x.target
    if x.form is Form.ATTACK:
        a = x.attacker
        if a is None:
            raise ValueError("attack explanation without an attacker")
        if x.dimension is Dimension.FEASIBILITY:
            return (
                f"S is not feasible because attack {a.label} -> {t.label} shows that "
                f"two machines {a.machine} and {t.machine} are assigned the same job {a.job}."
            )
        if x.dimension is Dimension.EFFICIENCY:
            return (
                f"S is not efficient because attack {a.label} -> {t.label} shows that "
                f"S can be improved by swapping jobs {a.job} and {t.job} "
                f"between machines {a.machine} and {t.machine}."
            )
        return (
            f"S violates fixed decisions because attack {a.label} -> {t.label} shows that "
            f"job {t.job} is assigned to machine {t.machine} contrary to the "
            f"negative fixed decision ({t.machine}, {t.job})."
        )
    if x.dimension is Dimension.FEASIBILITY:
        return (
            f"S is not feasible because non-attack E -/-> {t.label} shows that "
            f"job {t.job} is not scheduled."
        )
    if x.dimension is Dimension.EFFICIENCY:
        return (
            f"S is not efficient because non-attack E -/-> {t.label} shows that "
            f"S can be improved by moving job {t.job} to machine {t.machine}."
        )
    return (
        f"S violates fixed decisions because non-attack E -/-> {t.label} shows that "
        f"job {t.job} is not assigned to machine {t.machine} contrary to the "
        f"positive fixed decision ({t.machine}, {t.job})."
    )


def attack_explanations(
    inst: Instance, s: Schedule, d: FixedDecisions | None = None
) -> list[Explanation]:
    """Findings witnessed by an attack between two extension members.

    Feasibility: both directions of every same-job clash.  Efficiency: one
    per improving pair swap.  Fixed (only when decisions are supplied): the
    self-attack of every hit negative decision.
    """
    found: list[Explanation] = []
    swaps = pep_violations(inst, s)  # also bounds-checks the schedule
    by_job: dict[int, list[int]] = {}
    for i, j in sorted(s.assigned):
        by_job.setdefault(j, []).append(i)
    for j, machines in by_job.items():
        if len(machines) < 2:
            continue
        for i in machines:
            for k in machines:
                if i != k:
                    found.append(Explanation(
                        Dimension.FEASIBILITY, Form.ATTACK, target=Arg(k, j), attacker=Arg(i, j),
                        detail={"job": j, "machine": i, "other_machine": k}))
    for i, k, j, l in swaps:
        found.append(Explanation(
            Dimension.EFFICIENCY, Form.ATTACK, target=Arg(i, j), attacker=Arg(k, l),
            detail={"critical_machine": i, "critical_job": j,
                    "partner_machine": k, "partner_job": l}))
    if d is not None:
        hit, _missed = satisfies_fixed(s, d)
        for i, j in sorted(hit):
            found.append(Explanation(
                Dimension.FIXED, Form.ATTACK, target=Arg(i, j), attacker=Arg(i, j),
                detail={"machine": i, "job": j}))
    return sorted(found, key=_sort_key)


def non_attack_explanations(
    inst: Instance, s: Schedule, d: FixedDecisions | None = None
) -> list[Explanation]:
    """Findings witnessed by the extension failing to attack an outside
    argument.

    Feasibility: every machine slot of every unscheduled job.  Efficiency:
    one per improving single move.  Fixed (only when decisions are
    supplied): every missed positive decision.
    """
    found: list[Explanation] = []
    moves = sep_violations(inst, s)  # also bounds-checks the schedule
    scheduled = {j for _, j in s.assigned}
    for j in inst.job_ids:
        if j not in scheduled:
            for k in inst.machine_ids:
                found.append(Explanation(
                    Dimension.FEASIBILITY, Form.NON_ATTACK, target=Arg(k, j),
                    detail={"job": j, "machine": k}))
    for i, k, j in moves:
        found.append(Explanation(
            Dimension.EFFICIENCY, Form.NON_ATTACK, target=Arg(k, j),
            detail={"job": j, "from_machine": i, "to_machine": k}))
    if d is not None:
        _hit, missed = satisfies_fixed(s, d)
        for i, j in sorted(missed):
            found.append(Explanation(
                Dimension.FIXED, Form.NON_ATTACK, target=Arg(i, j),
                detail={"machine": i, "job": j}))
    return sorted(found, key=_sort_key)


@dataclass(frozen=True)
class Certificate:
    """A stable extension witnessing that the schedule is good in one
    dimension.  Fixed-kind certificates also list the respected decisions."""

    kind: AFKind
    extension: frozenset[Arg]
    satisfied_negative: tuple[Pair, ...] = ()
    satisfied_positive: tuple[Pair, ...] = ()

    @property
    def text(self) -> str:
        ext = "{" + ", ".join(a.label for a in sorted(self.extension)) + "}"
        if self.kind is AFKind.FEASIBILITY:
            return f"S is feasible: its extension {ext} is stable in the feasibility framework."
        if self.kind is AFKind.OPTIMALITY:
            return f"S is efficient: its extension {ext} is stable in the optimality framework."
        parts = [
            f"S satisfies the fixed decisions: its extension {ext} is stable "
            f"in the fixed decision framework."
        ]
        if self.satisfied_negative:
            listed = ", ".join(f"({i}, {j})" for i, j in self.satisfied_negative)
            parts.append(f"Respected negative decisions: {listed}.")
        if self.satisfied_positive:
            listed = ", ".join(f"({i}, {j})" for i, j in self.satisfied_positive)
            parts.append(f"Respected positive decisions: {listed}.")
        return " ".join(parts)


@dataclass(frozen=True)
class ExplanationReport:
    """Flags, findings, and certificates for one schedule.

    fixed_ok is None when no decisions were supplied; no fixed-dimension
    findings or certificates appear then.  A dimension gets a certificate
    exactly when the schedule's extension verifies stable in that
    dimension's framework.
    """

    feasible: bool
    efficient: bool
    fixed_ok: bool | None
    explanations: tuple[Explanation, ...]
    certificates: tuple[Certificate, ...]

    def for_dimension(self, dimension: Dimension | str) -> tuple[Explanation, ...]:
        wanted = Dimension(dimension)
        return tuple(x for x in self.explanations if x.dimension is wanted)

    def all_good(self) -> bool:
        """True iff every evaluated dimension passed."""
        return self.feasible and self.efficient and self.fixed_ok is not False


def explain_schedule(
    inst: Instance, s: Schedule, d: FixedDecisions | None = None
) -> ExplanationReport:
    """Evaluate one schedule on every applicable dimension.

    Flags come straight from the scheduling predicates, so each dimension is
    judged independently (an infeasible schedule still gets its efficiency
    and fixed analyses).  Findings are sorted feasibility first, attacks
    before non-attacks.
    """
    feasible = is_feasible(inst, s)
    efficient = not sep_violations(inst, s) and not pep_violations(inst, s)
    fixed_ok: bool | None = None
    if d is not None:
        hit, missed = satisfies_fixed(s, d)
        fixed_ok = not hit and not missed
    explanations = sorted(
        attack_explanations(inst, s, d) + non_attack_explanations(inst, s, d),
        key=_sort_key)
    extension = schedule_to_extension(s)
    certificates = []
    if is_stable(build_feasibility_af(inst), extension):
        certificates.append(Certificate(AFKind.FEASIBILITY, extension))
    if is_stable(build_optimality_af(inst, s), extension):
        certificates.append(Certificate(AFKind.OPTIMALITY, extension))
    if d is not None and is_stable(build_fixed_decision_af(inst, d), extension):
        certificates.append(Certificate(
            AFKind.FIXED, extension,
            satisfied_negative=tuple(sorted(d.negative)),
            satisfied_positive=tuple(sorted(d.positive))))
    return ExplanationReport(feasible, efficient, fixed_ok, tuple(explanations), tuple(certificates))
