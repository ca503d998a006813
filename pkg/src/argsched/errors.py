"""Shared exception types."""


class BoundsError(ValueError):
    """An index pair lies outside the instance grid."""


class MembershipError(ValueError):
    """An extension names arguments the framework does not contain."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget."""
