"""Shared exception types and the search-budget convention."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**8


def resolve_budget(budget=None):
    """Node budget for backtracking searches; QUANDLE_BUDGET overrides the default."""
    if budget is not None:
        return int(budget)
    return int(os.environ.get("QUANDLE_BUDGET", DEFAULT_BUDGET))


class CapExceeded(RuntimeError):
    """An enumeration or closure grew past its hard size cap."""


class BudgetExceeded(RuntimeError):
    """A backtracking search ran out of its node budget before deciding."""


class NotInClass(ValueError):
    """The quandle is not a homogeneous quandle with commutative inner group.

    Raised by presentation extraction when a precondition fails (non-abelian
    inner group, non-uniform orbit sizes, mismatched orbit group structure).
    """


class FormatError(ValueError):
    """A file did not parse; message carries the offending line number."""
