"""Enumeration of inclusion-maximal sets under a hereditary predicate."""
from __future__ import annotations

from typing import Callable

from .config import default_budgets
from .errors import BudgetError

Extends = Callable[[tuple[int, ...], int], bool]


def maximal_sets(count: int, extends: Extends, nodes: int | None = None) -> list[tuple[int, ...]]:
    """All inclusion-maximal index sets in ``range(count)`` satisfying a hereditary predicate.

    ``extends(chosen, d)`` must say whether ``chosen + {d}`` satisfies the
    predicate, given that ``chosen`` does.  Branches carry the candidates that can
    still be added and the already-explored ones that could be (Bron-Kerbosch);
    a set is reported when both are empty.  Output is sorted lexicographically.
    """
    limit = default_budgets().search_nodes if nodes is None else nodes
    out: list[tuple[int, ...]] = []
    visited = 0

    def expand(chosen: tuple[int, ...], cand: list[int], tried: list[int]):
        nonlocal visited
        visited += 1
        if visited > limit:
            raise BudgetError("maximal-set search exhausted", "search_nodes", limit)
        if not cand and not tried:
            out.append(chosen)
            return
        cand = list(cand)
        tried = list(tried)
        while cand:
            c = cand.pop(0)
            grown = tuple(sorted(chosen + (c,)))
            expand(grown, [d for d in cand if extends(grown, d)],
                   [d for d in tried if extends(grown, d)])
            tried.append(c)

    expand((), [i for i in range(count) if extends((), i)], [])
    return sorted(out)
