"""Enumeration budget shared by every exhaustive routine."""

from __future__ import annotations

import os
from typing import Iterable, Iterator, TypeVar

DEFAULT_BUDGET = 10**8
ENV_VAR = "PLANAR_COUNT_BUDGET"

T = TypeVar("T")


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would emit more items than allowed."""


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def limited(items: Iterable[T], budget: int | None = None) -> Iterator[T]:
    """Yield from ``items`` but fail loudly once more than ``budget`` have been produced."""
    cap = resolve_budget(budget)
    for i, item in enumerate(items):
        if i >= cap:
            raise BudgetExceeded(f"enumeration exceeded budget of {cap} items")
        yield item
