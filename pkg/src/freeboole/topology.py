"""Subbase combinatorics on finite hypergraph spaces.

A finite space is discrete, so only the subbase structure is interesting here.
Points are indices ``0..point_count-1`` and subbase sets are point bitmasks.

A subfamily is n-linked when every subfamily of at most n of its members has a
common point.  A subbase is n-ary when every nonempty n-linked subfamily has a
common point.  Being n-linked is hereditary and having empty intersection is
preserved by adding sets, so ``is_n_ary`` only inspects the inclusion-maximal
n-linked subfamilies.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import bits_of
from .config import default_budgets
from .errors import BudgetError, PreconditionError, TheoremCheckFailure
from .graphs import AnyGraph, Hypergraph, enumerate_anticliques
from .search import maximal_sets


@dataclass(frozen=True)
class SubbaseFamily:
    point_count: int
    sets: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.point_count < 0:
            raise PreconditionError("point_count must be non-negative")
        full = (1 << self.point_count) - 1
        object.__setattr__(self, "sets", tuple(self.sets))
        for s in self.sets:
            if s < 0 or s & ~full:
                raise PreconditionError(f"subbase set {s:#x} leaves the point set")
        labels = tuple(self.labels) or tuple(f"S{i}" for i in range(len(self.sets)))
        if len(labels) != len(self.sets):
            raise PreconditionError("one label per subbase set")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.sets)

    def points_of(self, i: int) -> list[int]:
        return bits_of(self.sets[i])


def _meet(masks) -> int:
    it = iter(masks)
    acc = next(it)
    for m in it:
        acc &= m
    return acc


def is_n_linked(sets: Sequence[int], n: int) -> bool:
    """Every subfamily of at most ``n`` members has a common point."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    sets = list(sets)
    for k in range(1, min(n, len(sets)) + 1):
        for combo in combinations(sets, k):
            if _meet(combo) == 0:
                return False
    return True


def _linked_extends(sets: Sequence[int], n: int):
    def extends(chosen: tuple[int, ...], d: int) -> bool:
        base = sets[d]
        if base == 0:
            return False
        for k in range(1, min(n - 1, len(chosen)) + 1):
            for combo in combinations(chosen, k):
                acc = base
                for i in combo:
                    acc &= sets[i]
                if acc == 0:
                    return False
        return True
    return extends


@dataclass(frozen=True)
class NaryResult:
    n: int
    is_n_ary: bool
    counterexample: tuple[int, ...] | None  # indices of an n-linked family with empty meet
    maximal_linked: int

    def __bool__(self):
        return self.is_n_ary


def is_n_ary(subbase: SubbaseFamily, n: int, budget: int | None = None,
             nodes: int | None = None) -> NaryResult:
    if n < 1:
        raise PreconditionError("n must be at least 1")
    limit = default_budgets().subbase_size if budget is None else budget
    if len(subbase) > limit:
        raise BudgetError("subbase too large", "subbase_size", limit)
    sets = subbase.sets
    families = maximal_sets(len(sets), _linked_extends(sets, n), nodes)
    witness = None
    for fam in families:
        if fam and _meet(sets[i] for i in fam) == 0:
            witness = fam
            break
    return NaryResult(n, witness is None, witness, len(families))


def canonical_subbase(h: AnyGraph, cap: int | None = None) -> SubbaseFamily:
    """Points are anticliques; for each vertex, ``v+`` (anticliques containing v)
    and ``v-`` (the rest)."""
    idx = enumerate_anticliques(h, cap)
    sets, labels = [], []
    for v in range(h.n):
        plus = sum(1 << p for p, a in enumerate(idx.anticliques) if a >> v & 1)
        minus = ((1 << len(idx)) - 1) & ~plus
        sets += [plus, minus]
        labels += [f"{v}+", f"{v}-"]
    return SubbaseFamily(len(idx), tuple(sets), tuple(labels))


def _max_edge(h: AnyGraph) -> int:
    return h.max_edge_size if isinstance(h, Hypergraph) else (2 if h.num_edges else 0)


def cmpn_upper(h: AnyGraph, budget: int | None = None, cap: int | None = None) -> int:
    """Least n >= 2 for which the canonical subbase is n-ary."""
    sub = canonical_subbase(h, cap)
    bound = max(2, _max_edge(h))
    n = 2
    while not is_n_ary(sub, n, budget):
        n += 1
        if n > max(bound, len(sub)):
            break
    if n > bound:
        raise TheoremCheckFailure(f"canonical subbase is not {bound}-ary (first n-ary at {n})")
    return n


def disjoint_union_nary(s: SubbaseFamily, t: SubbaseFamily, n: int,
                        budget: int | None = None) -> tuple[SubbaseFamily, NaryResult]:
    """Subbase of the disjoint sum: ``S``, shifted ``T``, and both summands whole."""
    for name, sub in (("first", s), ("second", t)):
        if not is_n_ary(sub, n, budget):
            raise PreconditionError(f"{name} subbase is not {n}-ary")
    shift = s.point_count
    x = (1 << shift) - 1
    y = ((1 << t.point_count) - 1) << shift
    sets = list(s.sets) + [m << shift for m in t.sets] + [x, y]
    labels = [f"L:{l}" for l in s.labels] + [f"R:{l}" for l in t.labels] + ["X", "Y"]
    w = SubbaseFamily(s.point_count + t.point_count, tuple(sets), tuple(labels))
    result = is_n_ary(w, n, budget)
    if not result:
        raise TheoremCheckFailure(f"disjoint union is not {n}-ary: {result.counterexample}")
    return w, result
