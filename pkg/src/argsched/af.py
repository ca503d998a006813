"""Finite argumentation frameworks with stable-extension semantics.

Arguments are assignment claims a(i,j).  Attacks live in per-argument
adjacency sets, so membership tests are O(1) and stable verification stays
polynomial; the exponential subset enumerator exists only as a desk-scale
oracle and is budgeted accordingly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .budgets import DEFAULT_EXTENSION_BUDGET, resolve_budget
from .errors import BudgetExceededError, MembershipError


class Arg(NamedTuple):
    """The claim that `machine` runs `job`; prints as a(i,j)."""

    machine: int
    job: int

    @property
    def label(self) -> str:
        return f"a({self.machine},{self.job})"


Attack = tuple[Arg, Arg]


class AFKind(str, enum.Enum):
    FEASIBILITY = "feasibility"
    OPTIMALITY = "optimality"
    FIXED = "fixed"


@dataclass(frozen=True)
class ArgFramework:
    """A directed attack graph over assignment arguments.

    Self-attacks are legal (negative decisions need them).  Every attack
    endpoint must be a known argument.
    """

    kind: AFKind
    args: frozenset[Arg]
    attacks: frozenset[Attack]

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", frozenset(Arg(*a) for a in self.args))
        object.__setattr__(self, "attacks", frozenset((Arg(*a), Arg(*b)) for a, b in self.attacks))
        for a, b in self.attacks:
            if a not in self.args or b not in self.args:
                raise ValueError(f"attack {a.label} -> {b.label} names arguments outside the framework")

    @cached_property
    def targets_of(self) -> dict[Arg, frozenset[Arg]]:
        """Out-neighbours per argument; every argument has an entry."""
        out: dict[Arg, set[Arg]] = {a: set() for a in self.args}
        for a, b in self.attacks:
            out[a].add(b)
        return {a: frozenset(ts) for a, ts in out.items()}

    @cached_property
    def sorted_args(self) -> tuple[Arg, ...]:
        return tuple(sorted(self.args))


def _as_members(af: ArgFramework, e: Iterable[Arg]) -> frozenset[Arg]:
    members = frozenset(Arg(*a) for a in e)
    foreign = members - af.args
    if foreign:
        labels = ", ".join(a.label for a in sorted(foreign))
        raise MembershipError(f"extension names arguments outside the framework: {labels}")
    return members


def is_conflict_free(af: ArgFramework, e: Iterable[Arg]) -> bool:
    """No attack joins two members of e."""
    members = _as_members(af, e)
    return all(af.targets_of[a].isdisjoint(members) for a in members)


def _verify_stable(af: ArgFramework, members: frozenset[Arg]) -> tuple[bool, int]:
    # The touch counter backs the polynomial-cost test; each increment is
    # one argument-pair the check looked at.
    touched = 0
    attacked: set[Arg] = set()
    for a in members:
        targets = af.targets_of[a]
        touched += len(targets)
        if not targets.isdisjoint(members):
            return False, touched
        attacked.update(targets)
    for b in af.args:
        touched += 1
        if b not in members and b not in attacked:
            return False, touched
    return True, touched


def is_stable(af: ArgFramework, e: Iterable[Arg]) -> bool:
    """Conflict-free and attacking every outside argument."""
    return _verify_stable(af, _as_members(af, e))[0]


def unattacked_by(af: ArgFramework, e: Iterable[Arg]) -> frozenset[Arg]:
    """Arguments outside e that no member of e attacks."""
    members = _as_members(af, e)
    attacked: set[Arg] = set()
    for a in members:
        attacked.update(af.targets_of[a])
    return frozenset(b for b in af.args if b not in members and b not in attacked)


def attacks_within(af: ArgFramework, e: Iterable[Arg]) -> list[Attack]:
    """Attacks with both endpoints inside e, sorted; the conflicts of e."""
    members = _as_members(af, e)
    return sorted((a, b) for a in members for b in af.targets_of[a] if b in members)


def enumerate_stable(af: ArgFramework, budget: int | None = None) -> list[frozenset[Arg]]:
    """Every stable extension, by checking all 2^k argument subsets.

    Exponential by design (the general problem is NP-hard), hence budgeted:
    2^k must fit within `budget` (default 2^24, ARGSCHED_BUDGET overrides).
    Implemented over bitmasks, independently of is_stable, so the two
    routes can cross-check each other in tests.  Results are sorted by
    their member lists.
    """
    budget = resolve_budget(budget, DEFAULT_EXTENSION_BUDGET)
    order = af.sorted_args
    k = len(order)
    if 2**k > budget:
        raise BudgetExceededError(f"2^{k} = {2 ** k} candidate extensions exceed the budget of {budget}")
    index = {a: i for i, a in enumerate(order)}
    target_mask = [0] * k
    for a, b in af.attacks:
        target_mask[index[a]] |= 1 << index[b]
    full = (1 << k) - 1
    found: list[frozenset[Arg]] = []
    for subset in range(1 << k):
        attacked = 0
        rest = subset
        conflict = False
        while rest:
            low = rest & -rest
            rest ^= low
            mask = target_mask[low.bit_length() - 1]
            if mask & subset:
                conflict = True
                break
            attacked |= mask
        if not conflict and attacked | subset == full:
            found.append(frozenset(order[i] for i in range(k) if subset >> i & 1))
    found.sort(key=lambda ext: tuple(sorted(ext)))
    return found
