"""Enumeration budgets and the ARGSCHED_BUDGET override."""
from __future__ import annotations

import os

BUDGET_ENV_VAR = "ARGSCHED_BUDGET"

# Job->machine maps visited by the exhaustive solver.
DEFAULT_ASSIGNMENT_BUDGET = 10**7
# Argument subsets visited by the stable-extension enumerator.
DEFAULT_EXTENSION_BUDGET = 2**24


def resolve_budget(explicit: int | None, default: int) -> int:
    """Effective budget: explicit argument, else env override, else default."""
    if explicit is not None:
        return explicit
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
