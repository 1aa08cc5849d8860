"""Enumeration budgets: refuse oversized scans instead of truncating them.

The default covers every desk-scale parameter set used in the test suite;
the PADIC_BUDGET environment variable or an explicit per-call value
overrides it.
"""

import os

from .errors import BadArgument, TooLarge

DEFAULT_BUDGET = 10_000_000
ENV_VAR = "PADIC_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Explicit value wins, then the environment, then the default."""
    if budget is None:
        raw = os.environ.get(ENV_VAR)
        if raw is None:
            return DEFAULT_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            raise BadArgument(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if budget < 1:
        raise BadArgument(f"budget must be positive, got {budget}")
    return budget


def ensure_within(size: int, budget: int) -> None:
    if size > budget:
        raise TooLarge(f"enumeration of size {size} exceeds budget {budget}")
