"""Scheduling instances, schedules, and their diagnostic predicates.

A schedule here is an arbitrary 0/1 assignment relation over machines x
jobs.  Infeasible schedules (a job doubled or dropped) are first-class
values: they are exactly what the explanation layer diagnoses, so nothing
in this module refuses them.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import BoundsError

Pair = tuple[int, int]


@dataclass(frozen=True)
class Instance:
    """An identical-machines instance: machine count plus job durations.

    Machines are numbered 1..machines and jobs 1..n by their position in
    processing_times.  Durations are positive integers so completion-time
    comparisons are exact.
    """

    machines: int
    processing_times: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "processing_times", tuple(self.processing_times))
        if isinstance(self.machines, bool) or not isinstance(self.machines, int):
            raise ValueError(f"machine count must be an integer, got {self.machines!r}")
        if self.machines < 1:
            raise ValueError(f"machine count must be >= 1, got {self.machines}")
        for j, p in enumerate(self.processing_times, start=1):
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"processing time of job {j} must be a positive integer, got {p!r}")

    @property
    def jobs(self) -> int:
        return len(self.processing_times)

    @property
    def machine_ids(self) -> range:
        return range(1, self.machines + 1)

    @property
    def job_ids(self) -> range:
        return range(1, self.jobs + 1)

    def processing_time(self, job: int) -> int:
        if not 1 <= job <= self.jobs:
            raise BoundsError(f"job {job} out of range 1..{self.jobs}")
        return self.processing_times[job - 1]


def check_pairs(inst: Instance, pairs: Iterable[Pair], what: str) -> None:
    """Raise BoundsError if any (machine, job) pair leaves the instance grid."""
    for i, j in sorted(pairs):
        if not 1 <= i <= inst.machines or not 1 <= j <= inst.jobs:
            raise BoundsError(
                f"{what} pair ({i}, {j}) out of range for "
                f"{inst.machines} machines and {inst.jobs} jobs")


@dataclass(frozen=True)
class Schedule:
    """The set of (machine, job) pairs that are switched on.

    No feasibility is implied: a job may sit on several machines or on none.
    """

    assigned: frozenset[Pair] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "assigned", frozenset((int(i), int(j)) for i, j in self.assigned))

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.assigned


@dataclass(frozen=True)
class ScheduleMetrics:
    """Per-machine completion times, the makespan, and the critical pairs."""

    completion: tuple[int, ...]
    cmax: int
    critical: frozenset[Pair]

    def completion_of(self, machine: int) -> int:
        return self.completion[machine - 1]


@dataclass(frozen=True)
class FixedDecisions:
    """Negative (forbidden) and positive (required) assignment decisions.

    The two sets must be disjoint, and no job may be positively pinned to
    two different machines; the constructor rejects both.
    """

    negative: frozenset[Pair] = frozenset()
    positive: frozenset[Pair] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "negative", frozenset((int(i), int(j)) for i, j in self.negative))
        object.__setattr__(self, "positive", frozenset((int(i), int(j)) for i, j in self.positive))
        overlap = self.negative & self.positive
        if overlap:
            raise ValueError(
                f"decisions must be disjoint; {sorted(overlap)} appear as both negative and positive")
        pinned: dict[int, int] = {}
        for i, j in sorted(self.positive):
            if j in pinned:
                raise ValueError(
                    f"job {j} positively pinned to machines {pinned[j]} and {i}; "
                    f"one machine per job is allowed")
            pinned[j] = i


def compute_metrics(inst: Instance, s: Schedule) -> ScheduleMetrics:
    """Completion times, makespan, and critical pairs of any schedule.

    Total: infeasible schedules are summed exactly like feasible ones.
    """
    check_pairs(inst, s.assigned, "schedule")
    completion = [0] * inst.machines
    for i, j in s.assigned:
        completion[i - 1] += inst.processing_time(j)
    cmax = max(completion)
    critical = frozenset(pair for pair in s.assigned if completion[pair[0] - 1] == cmax)
    return ScheduleMetrics(tuple(completion), cmax, critical)


def is_feasible(inst: Instance, s: Schedule) -> bool:
    """True iff every job sits on exactly one machine."""
    check_pairs(inst, s.assigned, "schedule")
    counts = Counter(j for _, j in s.assigned)
    return all(counts[j] == 1 for j in inst.job_ids)


def sep_violations(inst: Instance, s: Schedule) -> list[tuple[int, int, int]]:
    """Improving single moves, as triples (i, k, j).

    Job j is critical on machine i and strictly shorter than the load gap
    to machine k (C_i > C_k + p_j), so moving it to k would lower the worst
    completion time of the pair.  Empty list means no such move exists.
    """
    metrics = compute_metrics(inst, s)
    found = []
    for i, j in metrics.critical:
        p = inst.processing_time(j)
        for k in inst.machine_ids:
            if k != i and metrics.completion[i - 1] > metrics.completion[k - 1] + p:
                found.append((i, k, j))
    return sorted(found)


def pep_violations(inst: Instance, s: Schedule) -> list[tuple[int, int, int, int]]:
    """Improving pair swaps, as quadruples (i, k, j, l).

    Job j is critical on machine i, job l sits on machine k, and trading
    them strictly helps (p_j > p_l and C_i + p_l > C_k + p_j).  Empty list
    means no such swap exists.
    """
    metrics = compute_metrics(inst, s)
    found = []
    for i, j in metrics.critical:
        pj = inst.processing_time(j)
        for k, l in s.assigned:
            if k == i or l == j:
                continue
            pl = inst.processing_time(l)
            if pj > pl and metrics.completion[i - 1] + pl > metrics.completion[k - 1] + pj:
                found.append((i, k, j, l))
    return sorted(found)


def satisfies_fixed(s: Schedule, d: FixedDecisions) -> tuple[frozenset[Pair], frozenset[Pair]]:
    """Violated decisions as (hit negatives, missed positives).

    Both sets empty iff the schedule honours every decision.
    """
    return frozenset(d.negative & s.assigned), frozenset(d.positive - s.assigned)
