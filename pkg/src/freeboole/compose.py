"""Products, free products and graph-presented amalgamated free products.

Direct products put the factor ground sets side by side.  Free products live on
tuples of factor atoms (atoms of a finite algebra are its ultrafilters), the
first factor varying slowest.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import NamedTuple, Sequence

from .algebra import (
    Element, GeneratorFamily, Homomorphism, PartialMap, SetAlgebra, apply_hom,
    closure, is_n_preserving, sikorski_extends,
)
from .config import default_budgets
from .errors import BudgetError, PreconditionError, TheoremCheckFailure
from .free import anticlique_algebra, independence_report
from .graphs import Graph, amalgamate


@dataclass(frozen=True)
class Coordinate:
    """``p_i``: places an element of factor ``index`` in its block, 0 elsewhere."""

    index: int
    offset: int
    factor: SetAlgebra
    host_ground: int

    def __call__(self, e: Element) -> Element:
        if e not in self.factor:
            raise PreconditionError(f"{e!r} is not an element of factor {self.index}")
        return Element(self.host_ground, e.mask << self.offset)

    @property
    def block(self) -> Element:
        return self(self.factor.one)


class Product(NamedTuple):
    algebra: SetAlgebra
    coordinates: tuple[Coordinate, ...]


def direct_product(algebras: Sequence[SetAlgebra], budget: int | None = None) -> Product:
    limit = default_budgets().anticlique_cap if budget is None else budget
    total = sum(a.ground_size for a in algebras)
    if total > limit:
        raise BudgetError("product ground set too large", "anticlique_cap", limit)
    if total == 0:
        raise PreconditionError("product of no algebras")
    coords = []
    gens = []
    offset = 0
    for i, a in enumerate(algebras):
        coords.append(Coordinate(i, offset, a, total))
        offset += a.ground_size
    for c in coords:
        gens.extend(c(atom) for atom in c.factor.atoms)
    return Product(closure(total, gens), tuple(coords))


@dataclass(frozen=True)
class EmbeddedFamily:
    host: SetAlgebra
    members: tuple[Element, ...]
    provenance: tuple[tuple[int, int], ...]  # (factor, member index in that factor)
    coordinates: tuple[Coordinate, ...] = field(default=(), repr=False)

    def family(self) -> GeneratorFamily:
        return GeneratorFamily(self.host, self.members)


def embedded_product_family(families: Sequence[GeneratorFamily]) -> EmbeddedFamily:
    """The union of ``p_i[H_i]`` inside the product of the families' algebras."""
    prod = direct_product([f.algebra for f in families])
    members, prov = [], []
    for i, (fam, coord) in enumerate(zip(families, prod.coordinates)):
        for j, x in enumerate(fam.members):
            members.append(coord(x))
            prov.append((i, j))
    return EmbeddedFamily(prod.algebra, tuple(members), tuple(prov), prod.coordinates)


class FreeProduct(NamedTuple):
    algebra: SetAlgebra
    embeddings: tuple[Homomorphism, ...]
    tuples: tuple[tuple[int, ...], ...]


def free_product(algebras: Sequence[SetAlgebra], budget: int | None = None) -> FreeProduct:
    """Coproduct of finite algebras on tuples of factor atoms.

    The embedding of factor ``i`` sends an element to the set of tuples whose
    ``i``-th atom lies below it.
    """
    limit = default_budgets().anticlique_cap if budget is None else budget
    size = 1
    for a in algebras:
        size *= a.num_atoms
        if size > limit:
            raise BudgetError("free product has too many atoms", "anticlique_cap", limit)
    tuples = tuple(cartesian(*(range(a.num_atoms) for a in algebras)))
    ground = len(tuples)
    embeddings = []
    for i, a in enumerate(algebras):
        images = [0] * a.num_atoms
        for p, t in enumerate(tuples):
            images[t[i]] |= 1 << p
        embeddings.append([Element(ground, m) for m in images])
    gens = [e for imgs in embeddings for e in imgs]
    result = closure(ground, gens)
    homs = tuple(Homomorphism(a, result, imgs) for a, imgs in zip(algebras, embeddings))
    # independent subalgebras: each choice of one atom per factor meets in one tuple
    full = (1 << ground) - 1
    for t in tuples:
        m = full
        for i, imgs in enumerate(embeddings):
            m &= imgs[t[i]].mask
        if m == 0:
            raise TheoremCheckFailure("embedded factors are not independent")
    return FreeProduct(result, homs, tuples)


def embed_family(hom: Homomorphism, family: GeneratorFamily) -> list[Element]:
    return [apply_hom(hom, x) for x in family.members]


@dataclass(frozen=True)
class Amalgamation:
    graph: Graph
    algebra: SetAlgebra
    family: GeneratorFamily
    vertex_maps: tuple[tuple[int, ...], ...]
    independent: bool          # (i) 2-independent and generating
    restrictions_agree: bool   # (ii) factor homs agree on the shared subalgebra
    samples: int               # (iii) sampled joint extensions that passed
    failures: int

    @property
    def ok(self) -> bool:
        return self.independent and self.restrictions_agree and self.failures == 0


def amalgamated_free_product_via_graphs(
        graphs: Sequence[Graph], shared: Graph, embeddings: Sequence[Sequence[int]],
        samples: int = 50, seed: int = 0, max_target: int = 3) -> Amalgamation:
    """BA of the amalgamated union, with the generator family and three checks.

    (i) the union of the vertex generators is 2-independent and generates;
    (ii) BA(shared) -> BA(G_i) -> BA(union) is the same map for every factor;
    (iii) for random pairs of homomorphisms out of the factors that agree on the
    shared vertices, the glued generator map extends (Sikorski) and restricts to
    each factor map.
    """
    union, maps = amalgamate(graphs, shared, embeddings)
    alg, fam, _ = anticlique_algebra(union)
    report = independence_report(fam)
    independent = report.is_n_independent(2) and fam.generates()

    factors = [anticlique_algebra(g) for g in graphs]
    phis = []
    for (falg, ffam, _), m in zip(factors, maps):
        hom = sikorski_extends(PartialMap(ffam, alg, [fam[m[v]] for v in range(len(m))]))
        if hom is None:
            raise TheoremCheckFailure("factor generators did not extend into the amalgam")
        phis.append(hom)
    salg, sfam, _ = anticlique_algebra(shared)
    composites = []
    for (falg, ffam, _), emb, phi in zip(factors, embeddings, phis):
        psi = sikorski_extends(PartialMap(sfam, falg, [ffam[emb[s]] for s in range(shared.n)]))
        if psi is None:
            raise TheoremCheckFailure("shared generators did not extend into a factor")
        composites.append(tuple(apply_hom(phi, apply_hom(psi, atom)).mask for atom in salg.atoms))
    agree = all(c == composites[0] for c in composites)

    rng = random.Random(seed)
    passed = failed = 0
    shared_masks = [sum(1 << emb[s] for s in range(shared.n)) for emb in embeddings]
    for _ in range(samples):
        t = rng.randint(1, max_target)
        target = SetAlgebra.powerset(t)
        choices = []  # per target point, one anticlique per factor
        for _p in range(t):
            picks = []
            base = rng.choice(factors[0].index.anticliques) if graphs else 0
            picks.append(base)
            core = [s for s in range(shared.n) if base >> embeddings[0][s] & 1]
            for i in range(1, len(graphs)):
                want = sum(1 << embeddings[i][s] for s in core)
                pool = [a for a in factors[i].index.anticliques if a & shared_masks[i] == want]
                picks.append(rng.choice(pool))
            choices.append(picks)
        factor_images = []
        for i, g in enumerate(graphs):
            imgs = [Element(t, sum(1 << p for p in range(t) if choices[p][i] >> v & 1))
                    for v in range(g.n)]
            factor_images.append(imgs)
            if not is_n_preserving(PartialMap(factors[i].family, target, imgs), 2):
                raise TheoremCheckFailure("sampled factor map is not 2-preserving")
        glued: list[Element | None] = [None] * union.n
        consistent = True
        for i, m in enumerate(maps):
            for v, u in enumerate(m):
                y = factor_images[i][v]
                if glued[u] is not None and glued[u] != y:
                    consistent = False
                glued[u] = y
        hom = sikorski_extends(PartialMap(fam, target, glued)) if consistent else None
        if hom is None:
            failed += 1
            continue
        ok = all(apply_hom(hom, fam[m[v]]) == factor_images[i][v]
                 for i, m in enumerate(maps) for v in range(len(m)))
        if ok:
            passed += 1
        else:
            failed += 1
    return Amalgamation(union, alg, fam, tuple(tuple(m) for m in maps),
                        independent, agree, passed, failed)


def free_algebra(n: int) -> tuple[SetAlgebra, list[Element]]:
    """FR(n) as P(2^n) with ``x_i`` = points whose bit ``i`` is set."""
    ground = 1 << n
    gens = [Element(ground, sum(1 << p for p in range(ground) if p >> i & 1)) for i in range(n)]
    return closure(ground, gens), gens


def fr_times_finco_witness(n: int, spare: int = 0) -> EmbeddedFamily:
    """``{(x_i, {i}) : i < n} + {(0, 1)}`` inside FR(n) x P(n + spare).

    With ``spare = 0`` the singletons cover the unit of P(n); spare points play the
    part of the cofinite remainder that no finite set of singletons covers.
    """
    fr, xs = free_algebra(n)
    fin = SetAlgebra.powerset(n + spare)
    prod = direct_product([fr, fin])
    left, right = prod.coordinates
    members = [left(x) | right(Element(n + spare, 1 << i)) for i, x in enumerate(xs)]
    members.append(right(fin.one))
    prov = [(0, i) for i in range(n)] + [(1, n)]
    return EmbeddedFamily(prod.algebra, tuple(members), tuple(prov), prod.coordinates)
