"""Shared helpers: desk-scale samplers and independent oracle checks.

The oracles here recompute results straight from definitions, using plain
set comprehensions over the raw attack set rather than the package's
adjacency structures, so the two routes can disagree if either is wrong.
"""
from __future__ import annotations

import itertools
import random

from argsched import ArgFramework, Instance, Schedule


def desk_instances(seed: int, count: int, max_m: int = 3, max_n: int = 5,
                   max_p: int = 6, min_n: int = 1) -> list[Instance]:
    """Deterministic sample cycling through every (m, n) shape."""
    rng = random.Random(seed)
    shapes = [(m, n) for m in range(1, max_m + 1) for n in range(min_n, max_n + 1)]
    out = []
    for k in range(count):
        m, n = shapes[k % len(shapes)]
        out.append(Instance(m, tuple(rng.randint(1, max_p) for _ in range(n))))
    return out


def map_schedules(inst: Instance):
    """All m^n feasible schedules (every job picks one machine)."""
    for assignment in itertools.product(inst.machine_ids, repeat=inst.jobs):
        yield Schedule((i, j + 1) for j, i in enumerate(assignment))


def subset_schedules(inst: Instance):
    """All 2^(nm) schedules, feasible or not."""
    pairs = [(i, j) for i in inst.machine_ids for j in inst.job_ids]
    for mask in range(1 << len(pairs)):
        yield Schedule(pairs[b] for b in range(len(pairs)) if mask >> b & 1)


def random_subset_schedule(rng: random.Random, inst: Instance) -> Schedule:
    pairs = [(i, j) for i in inst.machine_ids for j in inst.job_ids]
    return Schedule(p for p in pairs if rng.random() < 0.4)


def naive_conflict_free(af: ArgFramework, members) -> bool:
    members = set(members)
    return not any((a, b) in af.attacks for a in members for b in members)


def naive_stable(af: ArgFramework, members) -> bool:
    """Definition check over the raw attack set, no adjacency involved."""
    members = set(members)
    if any((a, b) in af.attacks for a in members for b in members):
        return False
    return all(
        any((a, b) in af.attacks for a in members)
        for b in set(af.args) - members)
