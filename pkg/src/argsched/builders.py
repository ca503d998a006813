"""Constructors for the three framework kinds, plus the schedule/extension
correspondence."""
from __future__ import annotations

from typing import Iterable

from .af import AFKind, Arg, ArgFramework
from .scheduling import (
    FixedDecisions,
    Instance,
    Schedule,
    check_pairs,
    pep_violations,
    sep_violations,
)


def schedule_to_extension(s: Schedule) -> frozenset[Arg]:
    """x[i][j] = 1 becomes membership of a(i,j)."""
    return frozenset(Arg(i, j) for i, j in s.assigned)


def extension_to_schedule(e: Iterable[Arg]) -> Schedule:
    """Inverse of schedule_to_extension; round-trips exactly."""
    return Schedule((a[0], a[1]) for a in e)


def build_feasibility_af(inst: Instance) -> ArgFramework:
    """Full argument grid; each job's column is a clique of mutual attacks.

    Two claims putting the same job on different machines always clash, so
    the attack count is exactly n * m * (m - 1).
    """
    args = frozenset(Arg(i, j) for i in inst.machine_ids for j in inst.job_ids)
    attacks = frozenset(
        (Arg(i, j), Arg(k, j))
        for j in inst.job_ids
        for i in inst.machine_ids
        for k in inst.machine_ids
        if i != k)
    return ArgFramework(AFKind.FEASIBILITY, args, attacks)


def build_optimality_af(inst: Instance, s: Schedule) -> ArgFramework:
    """Feasibility attacks edited by the schedule's exchange analysis.

    Each improving single move (i, k, j) deletes the attack
    a(i,j) -> a(k,j); each improving pair swap (i, k, j, l) adds the attack
    a(k,l) -> a(i,j).  The two edit sets are disjoint: deletions stay
    within a job column, additions cross columns.  Infeasible schedules are
    accepted, the edits only need completion times.
    """
    base = build_feasibility_af(inst)
    removed = {(Arg(i, j), Arg(k, j)) for i, k, j in sep_violations(inst, s)}
    added = {(Arg(k, l), Arg(i, j)) for i, k, j, l in pep_violations(inst, s)}
    return ArgFramework(AFKind.OPTIMALITY, base.args, (base.attacks - removed) | added)


def build_fixed_decision_af(inst: Instance, d: FixedDecisions) -> ArgFramework:
    """Feasibility attacks edited by the decisions.

    Every negative decision self-attacks its argument; every positive
    decision makes its argument unattacked (all incoming attacks dropped).
    Additions run before removals; the order cannot matter because the two
    decision sets are disjoint, but fixing it keeps builds reproducible.
    """
    check_pairs(inst, d.negative, "negative decision")
    check_pairs(inst, d.positive, "positive decision")
    base = build_feasibility_af(inst)
    attacks = set(base.attacks)
    attacks.update((Arg(i, j), Arg(i, j)) for i, j in d.negative)
    protected = {Arg(i, j) for i, j in d.positive}
    return ArgFramework(
        AFKind.FIXED,
        base.args,
        frozenset((a, b) for a, b in attacks if b not in protected))
