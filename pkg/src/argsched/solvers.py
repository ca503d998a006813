"""Baseline solvers: the LPT heuristic and a budgeted exhaustive search."""
from __future__ import annotations

import itertools

from .budgets import DEFAULT_ASSIGNMENT_BUDGET, resolve_budget
from .errors import BudgetExceededError
from .scheduling import Instance, Schedule, pep_violations, sep_violations


def lpt_schedule(inst: Instance) -> Schedule:
    """Greedy list scheduling, longest job first.

    Jobs are taken by non-increasing duration (ties: lower job number) and
    each goes to the currently least-loaded machine (ties: lower machine
    number), so the result is deterministic.  Always feasible.
    """
    load = [0] * inst.machines
    pairs = []
    for j in sorted(inst.job_ids, key=lambda j: (-inst.processing_time(j), j)):
        i = min(inst.machine_ids, key=lambda k: (load[k - 1], k))
        pairs.append((i, j))
        load[i - 1] += inst.processing_time(j)
    return Schedule(pairs)


def _exchange_free(inst: Instance, s: Schedule) -> bool:
    return not sep_violations(inst, s) and not pep_violations(inst, s)


def exact_optimal(inst: Instance, budget: int | None = None) -> tuple[Schedule, int]:
    """Minimum-makespan schedule by enumerating every job->machine map.

    Exponential by design, hence budgeted: the m^n map count must fit
    within `budget` (default 10^7, ARGSCHED_BUDGET overrides).  Among the
    optima, ties between longest-finishing machines can leave some optimal
    maps with an improving single move or pair swap still open; the result
    is the lexicographically first optimum that admits neither.  One always
    exists: applying improving exchanges to any optimal map keeps it an
    optimal map and strictly shrinks its sorted load vector, so the process
    bottoms out on an exchange-free optimum.
    """
    budget = resolve_budget(budget, DEFAULT_ASSIGNMENT_BUDGET)
    total = inst.machines ** inst.jobs
    if total > budget:
        raise BudgetExceededError(
            f"{inst.machines}^{inst.jobs} = {total} assignment maps exceed the budget of {budget}")
    times = inst.processing_times
    best_cmax: int | None = None
    best: Schedule | None = None
    for assignment in itertools.product(inst.machine_ids, repeat=inst.jobs):
        load = [0] * inst.machines
        for j, i in enumerate(assignment):
            load[i - 1] += times[j]
        cmax = max(load)
        if best_cmax is None or cmax < best_cmax:
            best_cmax, best = cmax, None
        if cmax == best_cmax and best is None:
            s = Schedule((i, j + 1) for j, i in enumerate(assignment))
            if _exchange_free(inst, s):
                best = s
    assert best is not None and best_cmax is not None
    return best, best_cmax
