"""Anticlique algebras, n-independence, and the (hyper)graph round trip.

Everything here runs on *signatures*: for a family ``x_0..x_{k-1}`` the signature of
a ground point is the set of member indices containing it.  A subfamily has
nonzero meet iff it fits inside some realized signature.  The family is
omega-independent iff the realized signatures are closed under taking subsets
(the empty signature included, which is the statement that the members do not
cover the ground set), and its degree is the largest inclusion-minimal subfamily
with zero meet.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .algebra import (
    OMEGA, Element, GeneratorFamily, Homomorphism, PartialMap, SetAlgebra,
    bits_of, check_degree, closure, is_n_preserving, minimal_zero_masks, popcount,
    sikorski_extends, zero_subsets_closure,
)
from .config import default_budgets
from .errors import BudgetError, PreconditionError, TheoremCheckFailure
from .graphs import (
    AnticliqueIndex, AnyGraph, Graph, Hypergraph, Poset, comparability_graph,
    complement, enumerate_anticliques, graphs_isomorphic, is_graph_homomorphism,
    is_strictly_order_preserving,
)


class AnticliqueAlgebra(NamedTuple):
    algebra: SetAlgebra
    family: GeneratorFamily
    index: AnticliqueIndex


def anticlique_algebra(h: AnyGraph, cap: int | None = None) -> AnticliqueAlgebra:
    """BA(h): generated by ``v+ = {anticliques containing v}`` inside P(anticliques)."""
    idx = enumerate_anticliques(h, cap)
    ground = len(idx.anticliques)
    plus = []
    for v in range(h.n):
        m = 0
        for i, a in enumerate(idx.anticliques):
            if a >> v & 1:
                m |= 1 << i
        plus.append(Element(ground, m))
    algebra = closure(ground, plus)
    return AnticliqueAlgebra(algebra, GeneratorFamily(algebra, plus), idx)


def clique_algebra(g: Graph, cap: int | None = None) -> AnticliqueAlgebra:
    """BC(g) = BA(complement of g); the index lists cliques of ``g``."""
    alg, fam, idx = anticlique_algebra(complement(g), cap)
    return AnticliqueAlgebra(alg, fam, AnticliqueIndex(g, idx.anticliques))


@dataclass(frozen=True)
class IndependenceReport:
    omega_independent: bool
    degree: object  # int, or None when not omega-independent
    minimal_zero_sets: tuple[tuple[int, ...], ...]
    violations: tuple[tuple[int, ...], ...] = field(default=())

    def is_n_independent(self, n) -> bool:
        n = check_degree(n)
        return self.omega_independent and (n is OMEGA or self.degree <= n)


def _check_size(family: GeneratorFamily, budget: int | None):
    limit = default_budgets().family_size if budget is None else budget
    if len(family.members) > limit:
        raise BudgetError("family too large for exhaustive check", "family_size", limit)


def independence_report(family: GeneratorFamily, budget: int | None = None,
                        max_violations: int = 16) -> IndependenceReport:
    """Decide omega-independence and the least n for which the family is n-independent.

    Reduced criterion: the members do not cover the ground set, and every subfamily
    ``S`` with nonzero meet keeps a nonzero meet after intersecting with the
    complements of all other members.  In signature terms every nonzero subfamily
    is itself a realized signature.  A violation is such an ``S`` whose exact
    signature is missing; ``()`` signals that the members join to 1.
    """
    _check_size(family, budget)
    k = len(family.members)
    sigs = family.signatures()
    nonzero = zero_subsets_closure(sigs)
    missing = sorted(nonzero - sigs, key=lambda m: (popcount(m), bits_of(m)))
    minimal = tuple(tuple(bits_of(z)) for z in minimal_zero_masks(sigs, k))
    if missing:
        violations = tuple(tuple(bits_of(m)) for m in missing[:max_violations])
        return IndependenceReport(False, None, minimal, violations)
    degree = max((len(z) for z in minimal), default=1)
    return IndependenceReport(True, max(degree, 1), minimal)


def is_n_independent(family: GeneratorFamily, n, budget: int | None = None) -> bool:
    return independence_report(family, budget).is_n_independent(n)


def minimal_zero_sets(family: GeneratorFamily, budget: int | None = None) -> list[tuple[int, ...]]:
    """Inclusion-minimal index sets with zero meet, smallest first."""
    _check_size(family, budget)
    return [tuple(bits_of(z)) for z in minimal_zero_masks(family.signatures(), len(family.members))]


@dataclass(frozen=True)
class PerpHypergraph:
    hypergraph: Hypergraph
    family: GeneratorFamily


def perp_hypergraph(family: GeneratorFamily, budget: int | None = None) -> PerpHypergraph:
    """Hypergraph on member indices whose edges are the minimal zero-meet subfamilies."""
    edges = minimal_zero_sets(family, budget)
    return PerpHypergraph(Hypergraph.from_edges(len(family.members), edges), family)


def perp_graph(family: GeneratorFamily) -> Graph:
    """Graph on member indices joining members with zero meet."""
    m = family.masks
    k = len(m)
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)
                                if m[i] & m[j] == 0])


def is_family_isomorphism(f1: GeneratorFamily, f2: GeneratorFamily) -> bool:
    """Does ``f1[i] -> f2[i]`` extend to an isomorphism of the generated algebras?

    Both directions must pass Sikorski; the two extensions are then mutually
    inverse because each is the identity on generators.
    """
    if len(f1.members) != len(f2.members):
        return False
    fwd = sikorski_extends(PartialMap(f1, f2.algebra, f2.members))
    back = sikorski_extends(PartialMap(f2, f1.algebra, f1.members))
    if fwd is None or back is None:
        return False
    if not (f1.generates() and f2.generates()):
        return False
    return fwd.source.num_atoms == back.source.num_atoms and all(
        fwd.target.is_atom(y) for y in fwd.atom_images)


@dataclass(frozen=True)
class RoundTrip:
    ok: bool
    same_edges: bool
    isomorphic: bool
    algebra_iso: bool
    perp: Hypergraph


def roundtrip(h: AnyGraph, cap: int | None = None) -> RoundTrip:
    """BA(h), then its perp hypergraph on V+, then BA of that.

    Checks (a) the perp hypergraph has exactly the edges of ``h`` under ``v -> v+``,
    (b) it is isomorphic to ``h`` by search, and (c) the generator correspondence
    between BA(h) and BA(perp) extends to an isomorphism in both directions.
    """
    hyper = h.to_hypergraph() if isinstance(h, Graph) else h
    if not hyper.is_normalized():
        raise PreconditionError("round trip needs a normalized hypergraph")
    _, fam, _ = anticlique_algebra(h, cap)
    perp = perp_hypergraph(fam).hypergraph
    same = perp.edges == hyper.edges
    iso = graphs_isomorphic(perp, hyper)
    _, fam2, _ = anticlique_algebra(perp, cap)
    alg_iso = is_family_isomorphism(fam, fam2)
    return RoundTrip(same and iso and alg_iso, same, iso, alg_iso, perp)


def roundtrip_check(h: AnyGraph, cap: int | None = None) -> bool:
    return roundtrip(h, cap).ok


def extend_n_preserving(family: GeneratorFamily, target: SetAlgebra,
                        images: PartialMap | Sequence[Element], n) -> Homomorphism:
    """The unique extension of an n-preserving map on an n-independent generating family."""
    n = check_degree(n)
    pmap = images if isinstance(images, PartialMap) else PartialMap(family, target, tuple(images))
    if pmap.source is not family:
        raise PreconditionError("map is defined on a different family")
    if not is_n_independent(family, n):
        raise PreconditionError(f"family is not {n}-independent")
    if not family.generates():
        raise PreconditionError("family does not generate its algebra")
    if not is_n_preserving(pmap, n):
        raise PreconditionError(f"map is not {n}-preserving")
    hom = sikorski_extends(pmap)
    if hom is None:
        raise TheoremCheckFailure(f"{n}-preserving map on an {n}-independent family did not extend")
    return hom


def _atom_signatures(masks: Sequence[int], num_atoms: int) -> list[int]:
    sigs = [0] * num_atoms
    for i, m in enumerate(masks):
        for a in bits_of(m):
            sigs[a] |= 1 << i
    return sigs


def _independent_enough(sigs: Sequence[int], k: int, n) -> bool:
    realized = set(sigs)
    if zero_subsets_closure(realized) != realized:
        return False
    if n is OMEGA:
        return True
    return all(popcount(z) <= n for z in minimal_zero_masks(realized, k))


def freeness_search(a: SetAlgebra, budget: int | None = None,
                    nodes: int | None = None) -> tuple[object, tuple[Element, ...]] | None:
    """Least n with an n-independent generating subset of A+, plus the witness.

    For each n in turn, depth-first search over subsets of ``A+ - {1}`` in
    increasing element order; n-independence is hereditary so failing branches
    are cut.  The first generating family found is the lexicographically least
    witness of that size order.
    """
    budgets = default_budgets()
    limit = budgets.algebra_size if budget is None else budget
    node_limit = budgets.search_nodes if nodes is None else nodes
    if a.size > limit:
        raise BudgetError("algebra too large for freeness search", "algebra_size", limit)
    k = a.num_atoms
    full = (1 << k) - 1
    # candidates as atom-index masks: nonzero, not 1
    cand = list(range(1, full))
    count = 0

    for n in list(range(1, max(k, 2))) + [OMEGA]:
        chosen: list[int] = []

        def dfs(start: int) -> tuple[int, ...] | None:
            nonlocal count
            sigs = _atom_signatures(chosen, k)
            if len(set(sigs)) == k:
                return tuple(chosen)
            for idx in range(start, len(cand)):
                count += 1
                if count > node_limit:
                    raise BudgetError("freeness search exhausted", "search_nodes",
                                      node_limit, best={"lower_bound": n})
                chosen.append(cand[idx])
                if _independent_enough(_atom_signatures(chosen, k), len(chosen), n):
                    found = dfs(idx + 1)
                    if found is not None:
                        return found
                chosen.pop()
            return None

        found = dfs(0)
        if found is not None:
            return n, tuple(a.from_atoms(m) for m in found)
    return None


def freeness_degree_of_algebra(a: SetAlgebra, budget: int | None = None):
    result = freeness_search(a, budget)
    return None if result is None else result[0]


def semigroup_closure(family: GeneratorFamily | Sequence[Element],
                      budget: int | None = None) -> tuple[Element, ...]:
    """All finite meets of members, together with 0 and 1, ordered by mask."""
    members = list(family.members if isinstance(family, GeneratorFamily) else family)
    if not members:
        raise PreconditionError("need at least one element")
    n = members[0].ground_size
    limit = default_budgets().closure_size if budget is None else budget
    full = (1 << n) - 1
    seen = {full, 0}
    base = {m.mask for m in members}
    frontier = set(base)
    seen |= base
    while frontier:
        new = set()
        for x in frontier:
            for b in base:
                y = x & b
                if y not in seen:
                    new.add(y)
        seen |= new
        if len(seen) > limit:
            raise BudgetError("meet closure too large", "closure_size", limit)
        frontier = new
    return tuple(Element(n, m) for m in sorted(seen))


def is_disjunctive(h: Sequence[Element], budget: int | None = None) -> bool:
    """Monk's criterion on a finite set of nonzero elements.

    For every nonempty ``M`` within ``h`` there must be a homomorphism from the
    algebra generated by ``h`` into ``P(M)`` sending each ``k`` in ``h`` to the set of
    members of ``M`` below ``k``.  ``M`` empty is skipped: ``P(empty)`` is the
    degenerate one-element algebra.
    """
    h = list(h)
    if not h:
        return True
    if any(x.is_zero() for x in h):
        raise PreconditionError("disjunctive sets consist of nonzero elements")
    limit = default_budgets().search_nodes if budget is None else budget
    if (1 << len(h)) > limit:
        raise BudgetError("too many subsets to test", "search_nodes", limit)
    fam = GeneratorFamily.generating(h[0].ground_size, h)
    for sub in range(1, 1 << len(h)):
        ms = [h[i].mask for i in bits_of(sub)]
        size = len(ms)
        target = SetAlgebra.powerset(size)
        images = []
        for k in h:
            down = 0
            for j, m in enumerate(ms):
                if m & ~k.mask == 0:
                    down |= 1 << j
            images.append(Element(size, down))
        hom = sikorski_extends(PartialMap(fam, target, images))
        if hom is None:
            return False
        if any(hom(k) != y for k, y in zip(h, images)):
            return False
    return True


def graph_morphism_hom(s: Sequence[int], g: Graph, g2: Graph) -> Homomorphism:
    """BA(g) -> BA(g2) sending ``v+`` to ``s(v)+`` for a graph homomorphism ``s``."""
    if not is_graph_homomorphism(s, g, g2):
        raise PreconditionError("vertex map is not a graph homomorphism")
    _, fam, _ = anticlique_algebra(g)
    alg2, fam2, _ = anticlique_algebra(g2)
    pmap = PartialMap(fam, alg2, [fam2[s[v]] for v in range(g.n)])
    if not is_n_preserving(pmap, 2):
        raise TheoremCheckFailure("graph homomorphism induced a map that is not 2-preserving")
    hom = sikorski_extends(pmap)
    if hom is None:
        raise TheoremCheckFailure("2-preserving map on V+ did not extend")
    return hom


def poset_morphism_hom(f: Sequence[int], p: Poset, q: Poset) -> Homomorphism:
    """Incomparability algebras: a strictly monotone ``f`` induces ``p+ -> f(p)+``."""
    if len(f) != p.n or any(not 0 <= v < q.n for v in f):
        raise PreconditionError("map must send every element of p into q")
    if not is_strictly_order_preserving(f, p, q):
        raise PreconditionError("map is not strictly order-preserving")
    _, fam, _ = anticlique_algebra(comparability_graph(p))
    alg_q, fam_q, _ = anticlique_algebra(comparability_graph(q))
    pmap = PartialMap(fam, alg_q, [fam_q[f[v]] for v in range(p.n)])
    if not is_n_preserving(pmap, 2):
        raise TheoremCheckFailure("strictly monotone map induced a non 2-preserving map")
    hom = sikorski_extends(pmap)
    if hom is None:
        raise TheoremCheckFailure("2-preserving map on P+ did not extend")
    return hom
