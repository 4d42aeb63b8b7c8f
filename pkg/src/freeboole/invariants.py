"""Finite shadows of cardinal invariants: nInd, maximal families, ideal
independence, weak density, irredundance and moderation norms.

Searches over subsets of an algebra work on atom-index masks.  Every property
searched here is hereditary (closed under subsets), so maximal families are
enumerated Bron-Kerbosch style.  Witnesses are the lexicographically least index tuples.

In a finite algebra several invariants collapse: every finite algebra has atoms,
so the minimal size of a maximal n-independent family is 1 (0 in {0, 1}).  Reports mark
such values as degenerate.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

from .algebra import (
    OMEGA, Element, GeneratorFamily, SetAlgebra, bits_of, check_degree, closure,
    minimal_zero_masks, popcount, zero_subsets_closure,
)
from .config import default_budgets
from .errors import BudgetError, PreconditionError
from .search import maximal_sets

DEGENERATE_NOTE = ("degenerate: finite algebras have atoms, so i_n = 1 "
                   "(0 for the two-element algebra, where the empty family is maximal)")


def _lift(ok):
    return lambda chosen, d: ok(tuple(sorted(chosen + (d,))))


def _largest(sets: Iterable[tuple[int, ...]]) -> tuple[int, ...]:
    best: tuple[int, ...] = ()
    for s in sets:
        if len(s) > len(best) or (len(s) == len(best) and s < best):
            best = s
    return best


def max_pairwise_disjoint(family: GeneratorFamily, nodes: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Largest pairwise-disjoint subfamily (a maximum clique of the disjointness graph)."""
    m = family.masks

    def extends(chosen, d):
        return all(m[i] & m[d] == 0 for i in chosen)

    best = _largest(maximal_sets(len(m), extends, nodes))
    return len(best), best


def _signatures(masks: Sequence[int], ground: int) -> set[int]:
    sigs = [0] * ground
    for i, m in enumerate(masks):
        for p in bits_of(m):
            sigs[p] |= 1 << i
    return set(sigs)


def _degree_ok(masks: Sequence[int], ground: int, n) -> bool:
    """n-independence of a list of nonzero masks, via realized signatures."""
    sigs = _signatures(masks, ground)
    if zero_subsets_closure(sigs) != sigs:
        return False
    if n is OMEGA:
        return True
    return all(popcount(z) <= n for z in minimal_zero_masks(sigs, len(masks)))


def max_independent_subfamily(family: GeneratorFamily,
                              nodes: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Largest subfamily that is independent in the classical sense."""
    m = family.masks
    g = family.ground_size

    def ok(idx):
        return _degree_ok([m[i] for i in idx], g, 1)

    best = _largest(maximal_sets(len(m), _lift(ok), nodes))
    return len(best), best


def _check_algebra(a: SetAlgebra, budget: int | None):
    limit = default_budgets().algebra_size if budget is None else budget
    if a.size > limit:
        raise BudgetError("algebra too large for exhaustive search", "algebra_size", limit)


def _nonzero_atom_masks(a: SetAlgebra, include_one: bool) -> list[int]:
    full = (1 << a.num_atoms) - 1
    return [s for s in range(1, full + 1) if include_one or s != full]


def n_independent_maximal_atom_sets(a: SetAlgebra, n, budget: int | None = None,
                                    nodes: int | None = None) -> tuple[list[int], list[tuple[int, ...]]]:
    """Candidates (atom masks of ``A+``) and all maximal n-independent index sets."""
    n = check_degree(n)
    _check_algebra(a, budget)
    k = a.num_atoms
    cand = _nonzero_atom_masks(a, include_one=True)

    def ok(idx):
        return _degree_ok([cand[i] for i in idx], k, n)

    return cand, maximal_sets(len(cand), _lift(ok), nodes)


def n_ind_number(a: SetAlgebra, n, budget: int | None = None,
                 nodes: int | None = None) -> tuple[int, tuple[Element, ...]]:
    """Largest n-independent subset of ``A+``, by exhaustive search."""
    cand, sets = n_independent_maximal_atom_sets(a, n, budget, nodes)
    best = _largest(sets)
    return len(best), tuple(a.from_atoms(cand[i]) for i in best)


@dataclass(frozen=True)
class MaximalFamilies:
    families: tuple[tuple[Element, ...], ...]
    min_size: int
    complements_are_atoms: bool
    weakly_dense_products: bool
    note: str = DEGENERATE_NOTE


def maximal_n_independent_families(a: SetAlgebra, n, budget: int | None = None,
                                   nodes: int | None = None) -> MaximalFamilies:
    """Every maximal n-independent subset of ``A+`` with two checks attached.

    For each family H: ``-sum H`` must be an atom, and the nonzero elementary
    products over H must be weakly dense in A.
    """
    cand, sets = n_independent_maximal_atom_sets(a, n, budget, nodes)
    k = a.num_atoms
    full = (1 << k) - 1
    atoms_ok = True
    dense_ok = True
    families = []
    for idx in sets:
        masks = [cand[i] for i in idx]
        joined = 0
        for m in masks:
            joined |= m
        rest = full & ~joined
        if popcount(rest) != 1:
            atoms_ok = False
        prods = _elementary_product_masks(masks, k)
        if not _weakly_dense_masks(prods, k):
            dense_ok = False
        families.append(tuple(a.from_atoms(m) for m in masks))
    min_size = min((len(f) for f in families), default=0)
    return MaximalFamilies(tuple(families), min_size, atoms_ok, dense_ok)


def _elementary_product_masks(masks: Sequence[int], k: int) -> list[int]:
    full = (1 << k) - 1
    out = set()
    for choice in cartesian((None, 1, 0), repeat=len(masks)):
        m = full
        for x, e in zip(masks, choice):
            if e == 1:
                m &= x
            elif e == 0:
                m &= full & ~x
        if m:
            out.add(m)
    return sorted(out)


def elementary_products(family: Sequence[Element]) -> list[Element]:
    """All nonzero elementary products over ``family`` (the empty product 1 included)."""
    family = list(family)
    if not family:
        raise PreconditionError("need at least one element to fix the ground set")
    g = family[0].ground_size
    return [Element(g, m) for m in _elementary_product_masks([x.mask for x in family], g)]


def _weakly_dense_masks(ys: Sequence[int], k: int) -> bool:
    full = (1 << k) - 1
    for e in range(1, full + 1):
        ne = full & ~e
        if not any(y & ne == 0 or y & e == 0 for y in ys):
            return False
    return True


def is_weakly_dense(y: Sequence[Element], a: SetAlgebra, budget: int | None = None) -> bool:
    """Every nonzero element of ``a`` lies above some member, or its complement does."""
    _check_algebra(a, budget)
    ys = []
    for x in y:
        if x.is_zero():
            raise PreconditionError("weakly dense sets consist of nonzero elements")
        ys.append(a.atoms_below(x))
    return _weakly_dense_masks(ys, a.num_atoms)


def _ideal_ok(masks: Sequence[int]) -> bool:
    for i, m in enumerate(masks):
        rest = 0
        for j, o in enumerate(masks):
            if j != i:
                rest |= o
        if m & ~rest == 0:
            return False
    return True


def is_ideal_independent(x: Sequence[Element]) -> bool:
    """No member lies below the join of the others."""
    for e in x:
        if e.is_zero() or e.is_one():
            raise PreconditionError("ideal-independent sets may not contain 0 or 1")
    if len({e.mask for e in x}) != len(x):
        return False
    return _ideal_ok([e.mask for e in x])


@dataclass(frozen=True)
class IdealIndependenceReport:
    families: tuple[tuple[Element, ...], ...]
    min_size: int
    all_join_one: bool
    max_size: int


def maximal_ideal_independent_check(a: SetAlgebra, budget: int | None = None,
                                    nodes: int | None = None) -> IdealIndependenceReport:
    """Enumerate maximal ideal-independent subsets of ``A - {0, 1}`` and test their joins."""
    _check_algebra(a, budget)
    k = a.num_atoms
    full = (1 << k) - 1
    cand = _nonzero_atom_masks(a, include_one=False)

    def ok(idx):
        return _ideal_ok([cand[i] for i in idx])

    sets = maximal_sets(len(cand), _lift(ok), nodes)
    fams = []
    join_one = True
    for idx in sets:
        j = 0
        for i in idx:
            j |= cand[i]
        join_one &= j == full
        fams.append(tuple(a.from_atoms(cand[i]) for i in idx))
    sizes = [len(f) for f in fams]
    return IdealIndependenceReport(tuple(fams), min(sizes, default=0), join_one,
                                   max(sizes, default=0))


def is_incomparable(x: Sequence[Element]) -> bool:
    return not any(i != j and a <= b for i, a in enumerate(x) for j, b in enumerate(x))


def is_irredundant(x: Sequence[Element], a: SetAlgebra | None = None) -> bool:
    """No member belongs to the subalgebra generated by the others."""
    x = list(x)
    if not x:
        return True
    g = x[0].ground_size if a is None else a.ground_size
    for i, m in enumerate(x):
        others = x[:i] + x[i + 1:]
        if closure(g, others).contains_mask(m.mask):
            return False
    return True


@dataclass(frozen=True)
class NormSet:
    subject: Element
    family: tuple[Element, ...]
    split_members: tuple[int, ...]

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(self.family[i] for i in self.split_members)

    def __len__(self):
        return len(self.split_members)


def norm(a: Element, f: Sequence[Element]) -> NormSet:
    """Members ``g`` of ``f`` split by ``a``: ``0 < a*g < g``."""
    f = tuple(f)
    split = []
    for i, g in enumerate(f):
        part = a.mask & g.mask
        if part and part != g.mask:
            split.append(i)
    return NormSet(a, f, tuple(split))


def is_saturated(a: Element, f: Sequence[Element]) -> bool:
    return len(norm(a, f)) == 0


def is_moderate_in(f: Sequence[Element], g: Sequence[Element], bound: int | None = None) -> bool:
    """Norms are always finite here; with ``bound`` set, every norm must be at most ``bound``."""
    if bound is None:
        return True
    return all(len(norm(x, f)) <= bound for x in g)


@dataclass(frozen=True)
class PrefixFamily:
    members: tuple[Element, ...]
    provenance: tuple[tuple[int, ...], ...]  # exponent prefix producing each member
    dropped_zero: int
    generators: tuple[Element, ...]

    def generates(self) -> bool:
        g = self.generators[0].ground_size
        return closure(g, self.members) == closure(g, self.generators)

    def norm_within_prefixes(self) -> bool:
        """The norm of ``x_m`` only meets products over prefixes shorter than ``m + 1``."""
        for m, x in enumerate(self.generators):
            for i in norm(x, self.members).split_members:
                if len(self.provenance[i]) > m:
                    return False
        return True


def prefix_product_family(generators: Sequence[Element], budget: int | None = None) -> PrefixFamily:
    """``x_0^e_0 * ... * x_n^e_n`` for every prefix length and sign pattern.

    Zero products are dropped; equal products keep their first (shortest) prefix.
    """
    gens = tuple(generators)
    if not gens:
        raise PreconditionError("need at least one generator")
    limit = default_budgets().closure_size if budget is None else budget
    if (1 << (len(gens) + 1)) - 2 > limit:
        raise BudgetError("prefix family too large", "closure_size", limit)
    g = gens[0].ground_size
    full = (1 << g) - 1
    members: list[Element] = []
    prov: list[tuple[int, ...]] = []
    seen = set()
    dropped = 0
    for n in range(len(gens)):
        for eps in cartesian((1, 0), repeat=n + 1):
            m = full
            for x, e in zip(gens, eps):
                m &= x.mask if e else full & ~x.mask
            if not m:
                dropped += 1
                continue
            if m in seen:
                continue
            seen.add(m)
            members.append(Element(g, m))
            prov.append(eps)
    return PrefixFamily(tuple(members), tuple(prov), dropped, gens)


@dataclass(frozen=True)
class InvariantReport:
    atom_count: int
    family_size: int
    max_pairwise_disjoint_in_family: tuple[int, tuple[int, ...]]
    max_independent_subfamily: tuple[int, tuple[int, ...]]
    n_ind: dict
    notes: tuple[str, ...]


def invariant_report(family: GeneratorFamily, ns: Iterable = (1, 2, OMEGA),
                     budget: int | None = None) -> InvariantReport:
    """Family-level maxima plus nInd of the ambient algebra when it is small enough."""
    a = family.algebra
    notes = [DEGENERATE_NOTE]
    n_ind = {}
    limit = default_budgets().algebra_size if budget is None else budget
    if a.size <= limit:
        for n in ns:
            size, _ = n_ind_number(a, n, budget)
            n_ind[str(n)] = size
    else:
        notes.append(f"nInd skipped: algebra has {a.size} elements (limit {limit})")
    return InvariantReport(a.num_atoms, len(family.members), max_pairwise_disjoint(family),
                           max_independent_subfamily(family), n_ind, tuple(notes))
