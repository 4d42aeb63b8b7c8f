"""Theorem checks shared by the ``verify`` command, the acceptance tests and scripts.

Each check returns a :class:`CheckResult`; a failed check is a bug in the library
(the underlying statements are theorems), never a property of the input.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import (
    OMEGA, Element, GeneratorFamily, PartialMap, SetAlgebra, bits_of,
    is_n_preserving, sikorski_extends,
)
from .compose import (
    embed_family, embedded_product_family, free_algebra, free_product,
)
from .formats import format_hypergraph, hypergraph_from_text
from .free import (
    anticlique_algebra, independence_report, is_family_isomorphism, perp_hypergraph,
    roundtrip,
)
from .graphs import (
    AnyGraph, Graph, Hypergraph, disjoint_union,
    enumerate_cliques, join,
)
from .invariants import (
    is_ideal_independent, is_incomparable, is_irredundant, maximal_ideal_independent_check,
    maximal_n_independent_families, norm, prefix_product_family,
)
from .topology import canonical_subbase, cmpn_upper, disjoint_union_nary, is_n_ary


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: list = field(default_factory=list)  # first few failing cases, JSON-ready

    def fail(self, case, limit: int = 5):
        self.passed = False
        if len(self.failures) < limit:
            self.failures.append(case)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures}


def _hyper(h: AnyGraph) -> Hypergraph:
    return h.to_hypergraph() if isinstance(h, Graph) else h


def describe(h: AnyGraph) -> dict:
    return {"n": h.n, "edges": [list(bits_of(e)) for e in _hyper(h).edges]}


def check_counting() -> CheckResult:
    r = CheckResult("clique_and_atom_counts", True, 4)
    one_edge = Graph.from_edges(3, [(0, 1)])
    if len(enumerate_cliques(one_edge)) != 5:
        r.fail("3 vertices, 1 edge: clique count")
    if len(enumerate_cliques(Graph.empty(4))) != 5:
        r.fail("edgeless 4: clique count")
    k4 = anticlique_algebra(Graph.complete(4))
    p3 = anticlique_algebra(Graph.path(3))
    for name, a in (("K4", k4), ("P3", p3)):
        if (a.algebra.num_atoms, a.algebra.size) != (5, 32):
            r.fail(f"{name}: atoms/size")
    if k4.algebra.num_atoms != p3.algebra.num_atoms:
        r.fail("K4 vs P3 atom counts differ")
    return r


def check_v_plus_degree(graphs: Iterable[Graph]) -> CheckResult:
    """V+ is 2-independent in every graph's anticlique algebra."""
    r = CheckResult("v_plus_2_independent", True, 0)
    for g in graphs:
        r.cases += 1
        rep = independence_report(anticlique_algebra(g).family)
        if not rep.is_n_independent(2):
            r.fail(describe(g))
    return r


def check_hyperedge_size(hypergraphs: Iterable[Hypergraph]) -> CheckResult:
    """Degree of V+ is at most max(2, largest edge); equal to it for normalized input
    with an edge of size at least 2."""
    r = CheckResult("hyperedge_size_degree", True, 0)
    for h in hypergraphs:
        r.cases += 1
        rep = independence_report(anticlique_algebra(h).family)
        m = h.max_edge_size
        if not rep.omega_independent or rep.degree > max(2, m):
            r.fail(describe(h))
        elif h.is_normalized() and m >= 2 and rep.degree != m:
            r.fail(describe(h))
    return r


def check_roundtrip(hs: Iterable[AnyGraph]) -> CheckResult:
    r = CheckResult("perp_roundtrip", True, 0)
    for h in hs:
        r.cases += 1
        if not roundtrip(h).ok:
            r.fail(describe(h))
    return r


def check_wire_roundtrip(hs: Iterable[AnyGraph]) -> CheckResult:
    """Perp hypergraph written in ``p hyper`` form, re-read, rebuilt: same atom count."""
    r = CheckResult("perp_wire_format", True, 0)
    for h in hs:
        r.cases += 1
        a = anticlique_algebra(h)
        text = format_hypergraph(perp_hypergraph(a.family).hypergraph)
        again = anticlique_algebra(hypergraph_from_text(text))
        if again.algebra.num_atoms != a.algebra.num_atoms:
            r.fail(describe(h))
    return r


def random_hypergraph(rng: random.Random, n: int, sizes: Sequence[int], p: float) -> Hypergraph:
    edges = [c for k in sizes if k <= n for c in combinations(range(n), k) if rng.random() < p]
    return Hypergraph.from_edges(n, edges)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def _random_independent_family(rng: random.Random) -> tuple[GeneratorFamily, object]:
    """A generating family with known degree: V+ of a random hypergraph."""
    h = random_hypergraph(rng, rng.randint(1, 5), (2, 3), rng.choice((0.2, 0.4, 0.6)))
    fam = anticlique_algebra(h).family
    rep = independence_report(fam)
    n = rep.degree if rng.random() < 0.8 else OMEGA
    return fam, n


def _preserving_images(rng: random.Random, fam: GeneratorFamily, t: int) -> list[Element]:
    """Pull back along a random point map P(t) -> ground: always a homomorphism."""
    pick = [rng.randrange(fam.ground_size) for _ in range(t)]
    return [Element(t, sum(1 << q for q in range(t) if m >> pick[q] & 1)) for m in fam.masks]


def check_sikorski(cases: int, seed: int = 0) -> CheckResult:
    """n-preserving maps on n-independent generating families extend; others do not."""
    rng = random.Random(seed)
    r = CheckResult("n_preserving_extends", True, 0)
    for _ in range(cases):
        fam, n = _random_independent_family(rng)
        t = rng.randint(1, 3)
        target = SetAlgebra.powerset(t)
        if rng.random() < 0.5:
            imgs = _preserving_images(rng, fam, t)
        else:
            imgs = [Element(t, rng.randrange(1 << t)) for _ in fam.members]
        pmap = PartialMap(fam, target, imgs)
        r.cases += 1
        preserving = is_n_preserving(pmap, n)
        hom = sikorski_extends(pmap)
        if preserving:
            if hom is None or any(hom(x) != y for x, y in zip(fam.members, imgs)):
                r.fail({"n": str(n), "masks": list(fam.masks), "images": [y.mask for y in imgs]})
        elif hom is not None:
            r.fail({"n": str(n), "masks": list(fam.masks), "images": [y.mask for y in imgs],
                    "why": "non-preserving map extended"})
    return r


def composition_case(g: Graph, h: Graph) -> list[str]:
    """Problems found with the free-product and product identities for one pair."""
    problems = []
    a, b = anticlique_algebra(g), anticlique_algebra(h)
    fp = free_product([a.algebra, b.algebra])
    members = embed_family(fp.embeddings[0], a.family) + embed_family(fp.embeddings[1], b.family)
    union = anticlique_algebra(disjoint_union([g, h]))
    if fp.algebra.num_atoms != union.algebra.num_atoms:
        problems.append("free product atom count")
    elif not is_family_isomorphism(GeneratorFamily(fp.algebra, members), union.family):
        problems.append("free product vs disjoint union")
    emb = embedded_product_family([a.family, b.family])
    lfam = GeneratorFamily.generating(emb.host.ground_size, emb.members)
    joined = anticlique_algebra(join([g, h]))
    if lfam.algebra.num_atoms != joined.algebra.num_atoms:
        problems.append("product family atom count")
    elif not is_family_isomorphism(lfam, joined.family):
        problems.append("product family vs join")
    if emb.host.num_atoms != a.algebra.num_atoms + b.algebra.num_atoms:
        problems.append("direct product atom count")
    return problems


def check_composition(graphs: Sequence[Graph]) -> CheckResult:
    r = CheckResult("composition_identities", True, 0)
    for g in graphs:
        for h in graphs:
            r.cases += 1
            problems = composition_case(g, h)
            if problems:
                r.fail({"left": describe(g), "right": describe(h), "problems": problems})
    r.cases += 1
    k4 = Graph.complete(4)
    if anticlique_algebra(disjoint_union([k4, k4])).algebra.num_atoms != 25:
        r.fail("BA(K4 + K4) should have 25 atoms")
    return r


def check_maximality(sizes: Iterable[int], ideal_sizes: Iterable[int],
                     degrees=(2, 3, OMEGA)) -> CheckResult:
    """Maximal n-independent families: complement of the join is an atom and the
    elementary products are weakly dense.  Maximal ideal-independent families join to 1."""
    r = CheckResult("maximal_families", True, 0)
    for k in sizes:
        a = SetAlgebra.powerset(k)
        for n in degrees:
            rep = maximal_n_independent_families(a, n, budget=a.size)
            r.cases += len(rep.families)
            if not rep.complements_are_atoms:
                r.fail({"P": k, "n": str(n), "what": "complement of join is not an atom"})
            if not rep.weakly_dense_products:
                r.fail({"P": k, "n": str(n), "what": "products not weakly dense"})
            if k >= 2 and rep.min_size != 1:  # in {0,1} the empty family is maximal
                r.fail({"P": k, "n": str(n), "what": "minimal maximal family size != 1"})
    for k in ideal_sizes:
        a = SetAlgebra.powerset(k)
        rep = maximal_ideal_independent_check(a, budget=a.size)
        r.cases += len(rep.families)
        if not rep.all_join_one:
            r.fail({"P": k, "what": "maximal ideal-independent family with join != 1"})
    return r


def _random_omega_independent(rng: random.Random) -> list[Element]:
    if rng.random() < 0.5:
        return list(_random_independent_family(rng)[0].members)
    while True:
        g = rng.randint(2, 6)
        k = rng.randint(1, 4)
        masks = rng.sample(range(1, (1 << g) - 1), min(k, (1 << g) - 2))
        fam = GeneratorFamily.generating(g, [Element(g, m) for m in masks])
        if independence_report(fam).omega_independent:
            return list(fam.members)


def check_bridges(cases: int, seed: int = 0) -> CheckResult:
    """omega-independent families are ideal-independent, incomparable and irredundant."""
    rng = random.Random(seed)
    r = CheckResult("independence_bridges", True, 0)
    for _ in range(cases):
        fam = _random_omega_independent(rng)
        r.cases += 1
        ok = is_ideal_independent(fam) and is_incomparable(fam) and is_irredundant(fam)
        if not ok:
            r.fail({"ground": fam[0].ground_size, "masks": [x.mask for x in fam]})
    return r


def norm_lemma_holds(a: Element, b: Element, f: Sequence[Element]) -> bool:
    na = set(norm(a, f).split_members)
    nb = set(norm(b, f).split_members)
    return (na == set(norm(~a, f).split_members)
            and set(norm(a | b, f).split_members) <= na | nb
            and set(norm(a & b, f).split_members) <= na | nb)


def random_independent(rng: random.Random, k: int, ground: int) -> list[Element]:
    """k classically independent elements of P(ground): a random surjection onto
    the 2^k cells of the free algebra."""
    cells = 1 << k
    owner = list(range(cells)) + [rng.randrange(cells) for _ in range(ground - cells)]
    rng.shuffle(owner)
    return [Element(ground, sum(1 << p for p, c in enumerate(owner) if c >> i & 1))
            for i in range(k)]


def check_moderation(triples: int, seed: int = 0, ground: int = 6,
                     max_generators: int = 4, families: int = 20) -> CheckResult:
    rng = random.Random(seed)
    r = CheckResult("moderation_norms", True, 0)
    full = 1 << ground
    for _ in range(triples):
        a = Element(ground, rng.randrange(full))
        b = Element(ground, rng.randrange(full))
        f = [Element(ground, rng.randrange(1, full)) for _ in range(rng.randint(1, 6))]
        r.cases += 1
        if not norm_lemma_holds(a, b, f):
            r.fail({"a": a.mask, "b": b.mask, "F": [x.mask for x in f]})
    for k in range(1, max_generators + 1):
        gen_sets = [free_algebra(k)[1]]
        gen_sets += [random_independent(rng, k, rng.randint(1 << k, (1 << k) + 6))
                     for _ in range(families)]
        for gens in gen_sets:
            r.cases += 1
            pf = prefix_product_family(gens)
            if not pf.generates() or not pf.norm_within_prefixes():
                r.fail({"ground": gens[0].ground_size, "gens": [x.mask for x in gens]})
    return r


def check_topology(graphs: Iterable[Graph], hypergraphs: Iterable[tuple[Hypergraph, int]],
                   union_pairs: int = 6) -> CheckResult:
    """Graph canonical subbases are 2-ary; listed hypergraphs are exactly n-ary;
    disjoint sums keep n-arity."""
    r = CheckResult("subbase_arity", True, 0)
    graph_subs = []
    for g in graphs:
        r.cases += 1
        sub = canonical_subbase(g)
        if not is_n_ary(sub, 2):
            r.fail(describe(g))
        graph_subs.append(sub)
        if cmpn_upper(g) != 2:
            r.fail({"graph": describe(g), "what": "cmpn bound"})
    hyper_subs = []
    for h, n in hypergraphs:
        r.cases += 1
        sub = canonical_subbase(h)
        if not is_n_ary(sub, n) or (n > 2 and is_n_ary(sub, n - 1)):
            r.fail({"hypergraph": describe(h), "n": n})
        hyper_subs.append((sub, n))
    for group, n in ((graph_subs, 2), ([s for s, m in hyper_subs if m == 3], 3)):
        for s, t in list(combinations(group, 2))[:union_pairs] + [(x, x) for x in group[:2]]:
            r.cases += 1
            w, res = disjoint_union_nary(s, t, n)
            if not res:
                r.fail({"union": [len(s), len(t)], "n": n})
    return r
