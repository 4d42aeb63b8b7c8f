"""Search budgets.

Every exhaustive search takes an explicit limit so that a 2^n blow-up turns into a
:class:`~freeboole.errors.BudgetError` instead of a hung process.  Defaults can be
scaled up with the ``FREEBOOLE_BUDGET_DEFAULT`` environment variable (an integer
multiplier, values below 1 are ignored).
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Iterator

ENV_VAR = "FREEBOOLE_BUDGET_DEFAULT"


def _scale() -> int:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(value, 1)


@dataclass(frozen=True)
class Budgets:
    anticlique_cap: int = 1_000_000
    family_size: int = 20          # members in exhaustive family checks
    algebra_size: int = 64         # elements of algebras searched exhaustively
    search_nodes: int = 2_000_000  # DFS nodes in subset searches
    closure_size: int = 100_000    # elements produced by meet closures
    subbase_size: int = 24         # subbase sets in n-arity checks
    iso_vertices: int = 10         # vertex limit for isomorphism search

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if value <= 0:
                raise ValueError(f"budget {name} must be positive, got {value}")

    def scaled(self, factor: int) -> "Budgets":
        return replace(self, **{k: v * factor for k, v in self.__dict__.items()})


_override: list[Budgets] = []


def default_budgets() -> Budgets:
    """Budgets in force: an active :func:`using_budgets` block, else the
    defaults with the environment multiplier applied."""
    if _override:
        return _override[-1]
    scale = _scale()
    base = Budgets()
    return base if scale == 1 else base.scaled(scale)


@contextmanager
def using_budgets(budgets: Budgets) -> Iterator[Budgets]:
    _override.append(budgets)
    try:
        yield budgets
    finally:
        _override.pop()


DEFAULT = default_budgets()
