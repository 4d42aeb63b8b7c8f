"""Graphs, hypergraphs and posets on vertex sets ``[0, n)``.

Vertex sets and edges are bit masks.  Graphs are loopless and undirected;
hypergraph edges have at least two vertices.  A graph is treated as a 2-uniform
hypergraph wherever anticliques are concerned.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .algebra import bits_of, popcount
from .config import default_budgets
from .errors import BudgetError, PreconditionError


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        adj = tuple(self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if len(adj) != self.n:
            raise ValueError("adjacency needs one row per vertex")
        for v, row in enumerate(adj):
            if row >> self.n:
                raise ValueError(f"vertex {v} adjacent to a vertex outside [0, {self.n})")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits_of(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u},{v} outside [0, {n})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits_of(self.adjacency[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adjacency) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def edge_masks(self) -> list[int]:
        return [(1 << u) | (1 << v) for u, v in self.edges]

    def to_hypergraph(self) -> "Hypergraph":
        return Hypergraph(self.n, tuple(self.edge_masks()))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(len(vertices), [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos])


@dataclass(frozen=True)
class Hypergraph:
    """A loopless hypergraph; ``edges`` are vertex masks, kept sorted and deduplicated."""

    n: int
    edges: tuple[int, ...]

    def __post_init__(self):
        edges = sorted(set(self.edges), key=lambda m: (popcount(m), bits_of(m)))
        for e in edges:
            if e < 0 or e >> self.n:
                raise ValueError(f"edge {bits_of(e)} outside [0, {self.n})")
            if popcount(e) < 2:
                raise ValueError(f"hyperedge {bits_of(e)} has fewer than 2 vertices")
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, tuple(_mask(e) for e in edges))

    @property
    def edge_sets(self) -> list[tuple[int, ...]]:
        return [tuple(bits_of(e)) for e in self.edges]

    @property
    def max_edge_size(self) -> int:
        return max((popcount(e) for e in self.edges), default=0)

    def edge_masks(self) -> list[int]:
        return list(self.edges)

    def is_normalized(self) -> bool:
        """No edge contains another edge."""
        es = self.edges
        return not any(a != b and a & b == a for a in es for b in es)

    def normalize(self) -> "Hypergraph":
        """Drop every edge that contains a smaller edge."""
        keep = [b for b in self.edges if not any(a != b and a & b == a for a in self.edges)]
        return Hypergraph(self.n, tuple(keep))

    def is_graph(self) -> bool:
        return all(popcount(e) == 2 for e in self.edges)

    def to_graph(self) -> Graph:
        if not self.is_graph():
            raise PreconditionError("hypergraph has an edge of size other than 2")
        return Graph.from_edges(self.n, [tuple(bits_of(e)) for e in self.edges])


AnyGraph = Union[Graph, Hypergraph]


@dataclass(frozen=True)
class Poset:
    """A strict partial order; ``above[u]`` is the mask of all ``v`` with ``u < v``."""

    n: int
    above: tuple[int, ...]

    def __post_init__(self):
        above = tuple(self.above)
        object.__setattr__(self, "above", above)
        if len(above) != self.n:
            raise ValueError("need one row per element")
        for u, row in enumerate(above):
            if row >> u & 1:
                raise ValueError(f"relation is reflexive at {u}")
            for v in bits_of(row):
                if above[v] & ~row:
                    raise ValueError(f"relation is not transitive at {u}<{v}")

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of ``u < v`` pairs; raises ValueError on a cycle."""
        rows = [0] * n
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"pair {u},{v} outside [0, {n})")
            rows[u] |= 1 << v
        changed = True
        while changed:
            changed = False
            for u in range(n):
                new = rows[u]
                for v in bits_of(rows[u]):
                    new |= rows[v]
                if new != rows[u]:
                    rows[u] = new
                    changed = True
        for u in range(n):
            if rows[u] >> u & 1:
                raise ValueError(f"order relation has a cycle through {u}")
        return cls(n, tuple(rows))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relations(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, (0,) * n)

    def less(self, u: int, v: int) -> bool:
        return bool(self.above[u] >> v & 1)

    def comparable(self, u: int, v: int) -> bool:
        return self.less(u, v) or self.less(v, u)


@dataclass(frozen=True)
class AnticliqueIndex:
    """The anticliques of a (hyper)graph, sorted by mask value."""

    host: AnyGraph
    anticliques: tuple[int, ...]

    def __len__(self):
        return len(self.anticliques)

    def index(self, mask: int) -> int:
        return self._lookup()[mask]

    def _lookup(self) -> dict[int, int]:
        cache = self.__dict__.get("_cache")
        if cache is None:
            cache = {m: i for i, m in enumerate(self.anticliques)}
            object.__setattr__(self, "_cache", cache)
        return cache

    def sets(self) -> list[tuple[int, ...]]:
        return [tuple(bits_of(a)) for a in self.anticliques]


def _edge_masks(h: AnyGraph) -> list[int]:
    return h.edge_masks()


def enumerate_anticliques(h: AnyGraph, cap: int | None = None) -> AnticliqueIndex:
    """All vertex sets containing no edge, by backtracking over vertices.

    An edge is checked when its largest vertex is decided, so each branch only
    looks at the edges that close at the current vertex.
    """
    if cap is None:
        cap = default_budgets().anticlique_cap
    n = h.n
    closing: list[list[int]] = [[] for _ in range(n)]
    for e in _edge_masks(h):
        closing[e.bit_length() - 1].append(e)
    out: list[int] = []

    def grow(v: int, current: int):
        if v == n:
            out.append(current)
            if len(out) > cap:
                raise BudgetError("too many anticliques", "anticlique_cap", cap)
            return
        grow(v + 1, current)
        with_v = current | (1 << v)
        for e in closing[v]:
            if e & with_v == e:
                return
        grow(v + 1, with_v)

    grow(0, 0)
    out.sort()
    return AnticliqueIndex(h, tuple(out))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency)))


def enumerate_cliques(g: Graph, cap: int | None = None) -> AnticliqueIndex:
    idx = enumerate_anticliques(complement(g), cap)
    return AnticliqueIndex(g, idx.anticliques)


def disjoint_union(gs: Sequence[AnyGraph]) -> AnyGraph:
    """Vertex sets placed side by side (offsets in list order), no cross edges."""
    if any(isinstance(g, Hypergraph) for g in gs):
        n = 0
        edges = []
        for g in gs:
            edges.extend(e << n for e in _edge_masks(g))
            n += g.n
        return Hypergraph(n, tuple(edges))
    rows: list[int] = []
    n = 0
    for g in gs:
        rows.extend(r << n for r in g.adjacency)
        n += g.n
    return Graph(n, tuple(rows))


def join(gs: Sequence[Graph]) -> Graph:
    """Disjoint union plus every edge between different factors."""
    total = sum(g.n for g in gs)
    full = (1 << total) - 1
    rows: list[int] = []
    offset = 0
    for g in gs:
        block = ((1 << g.n) - 1) << offset
        rows.extend((r << offset) | (full & ~block) for r in g.adjacency)
        offset += g.n
    return Graph(total, tuple(rows))


def amalgamate(gs: Sequence[Graph], shared: Graph,
               embeddings: Sequence[Sequence[int]]) -> tuple[Graph, list[list[int]]]:
    """Glue ``gs`` along a common induced subgraph.

    ``embeddings[i][s]`` is the vertex of ``gs[i]`` playing shared vertex ``s``.  The
    result numbers the shared vertices first, then the remaining vertices of each
    factor in order.  Returns the graph and, per factor, the map from factor
    vertices to result vertices.
    """
    if len(embeddings) != len(gs):
        raise PreconditionError("need one embedding per factor")
    s = shared.n
    maps: list[list[int]] = []
    next_vertex = s
    for g, emb in zip(gs, embeddings):
        emb = list(emb)
        if len(emb) != s or len(set(emb)) != s or any(not 0 <= v < g.n for v in emb):
            raise PreconditionError("embedding must be an injective map into the factor")
        for a in range(s):
            for b in range(a + 1, s):
                if shared.adjacent(a, b) != g.adjacent(emb[a], emb[b]):
                    raise PreconditionError(
                        f"embedding is not induced: shared pair {a},{b}")
        m = [-1] * g.n
        for a, v in enumerate(emb):
            m[v] = a
        for v in range(g.n):
            if m[v] < 0:
                m[v] = next_vertex
                next_vertex += 1
        maps.append(m)
    edges = set()
    for g, m in zip(gs, maps):
        for u, v in g.edges:
            a, b = sorted((m[u], m[v]))
            edges.add((a, b))
    if not gs:
        return shared, maps
    return Graph.from_edges(next_vertex, sorted(edges)), maps


def amalgamated_union(gs: Sequence[Graph], shared: Graph,
                      embeddings: Sequence[Sequence[int]]) -> Graph:
    return amalgamate(gs, shared, embeddings)[0]


def is_graph_homomorphism(f: Sequence[int] | Mapping[int, int], src: Graph, dst: Graph) -> bool:
    for u, v in src.edges:
        a, b = f[u], f[v]
        if a == b or not dst.adjacent(a, b):
            return False
    return True


def is_hypergraph_homomorphism(f: Sequence[int] | Mapping[int, int],
                               src: AnyGraph, dst: AnyGraph) -> bool:
    targets = set(_edge_masks(dst))
    for e in _edge_masks(src):
        if _mask(f[v] for v in bits_of(e)) not in targets:
            return False
    return True


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.n, tuple(
        p.above[u] | _mask(v for v in range(p.n) if p.above[v] >> u & 1)
        for u in range(p.n)))


def is_strictly_order_preserving(f: Sequence[int], p: Poset, q: Poset) -> bool:
    return all(q.less(f[u], f[v]) for u in range(p.n) for v in bits_of(p.above[u]))


def _profiles(h: Hypergraph) -> list[tuple[int, ...]]:
    """Per vertex, the sorted sizes of the edges through it."""
    prof: list[list[int]] = [[] for _ in range(h.n)]
    for e in h.edges:
        for v in bits_of(e):
            prof[v].append(popcount(e))
    return [tuple(sorted(p)) for p in prof]


def find_isomorphism(g1: AnyGraph, g2: AnyGraph, limit: int | None = None) -> list[int] | None:
    """A vertex bijection mapping the edges of ``g1`` onto those of ``g2``.

    Backtracking over vertices of ``g1`` in decreasing-degree order; candidate
    images must carry the same edge-size profile, and every edge lying inside the
    assigned part must map to an edge and vice versa.
    """
    if limit is None:
        limit = default_budgets().iso_vertices
    h1 = g1.to_hypergraph() if isinstance(g1, Graph) else g1
    h2 = g2.to_hypergraph() if isinstance(g2, Graph) else g2
    if max(h1.n, h2.n) > limit:
        raise BudgetError("graph too large for isomorphism search", "iso_vertices", limit)
    if h1.n != h2.n or len(h1.edges) != len(h2.edges):
        return None
    p1, p2 = _profiles(h1), _profiles(h2)
    if sorted(p1) != sorted(p2):
        return None
    n = h1.n
    order = sorted(range(n), key=lambda v: (-len(p1[v]), v))
    edges2 = set(h2.edges)
    through1: list[list[int]] = [[] for _ in range(n)]
    for e in h1.edges:
        through1[max(bits_of(e), key=order.index)].append(e)
    through2: list[list[int]] = [[] for _ in range(n)]
    for e in h2.edges:
        for v in bits_of(e):
            through2[v].append(e)
    f = [-1] * n
    used = 0

    def image(e: int) -> int:
        return _mask(f[v] for v in bits_of(e))

    def extend(depth: int, domain: int, rng: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in range(n):
            if used >> w & 1 or p1[v] != p2[w]:
                continue
            f[v] = w
            used |= 1 << w
            new_dom, new_rng = domain | (1 << v), rng | (1 << w)
            ok = all(image(e) in edges2 for e in through1[v])
            if ok:
                inside2 = sum(1 for e in through2[w] if e & new_rng == e)
                ok = inside2 == len(through1[v])
            if ok and extend(depth + 1, new_dom, new_rng):
                return True
            used &= ~(1 << w)
            f[v] = -1
        return False

    return list(f) if extend(0, 0, 0) else None


def graphs_isomorphic(g1: AnyGraph, g2: AnyGraph, limit: int | None = None) -> bool:
    return find_isomorphism(g1, g2, limit) is not None


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in bits_of(bits)])


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Lexicographically least adjacency tuple over all relabellings (small n only)."""
    best = None
    for perm in permutations(range(g.n)):
        rows = [0] * g.n
        for u, v in g.edges:
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        t = tuple(rows)
        if best is None or t < best:
            best = t
    return best if best is not None else ()


def graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    seen: dict[tuple[int, ...], Graph] = {}
    for g in all_graphs(n):
        key = canonical_form(g)
        if key not in seen:
            seen[key] = Graph(n, key)
    return [seen[k] for k in sorted(seen, key=lambda k: (sum(map(popcount, k)), k))]


def all_hypergraphs(n: int, sizes: Iterable[int], normalized: bool = False) -> Iterator[Hypergraph]:
    """Every labelled hypergraph on ``n`` vertices whose edges have the given sizes."""
    candidates = [_mask(c) for k in sorted(set(sizes)) if k >= 2
                  for c in combinations(range(n), k)]
    for bits in range(1 << len(candidates)):
        edges = [candidates[i] for i in bits_of(bits)]
        if normalized and any(a != b and a & b == a for a in edges for b in edges):
            continue
        yield Hypergraph(n, tuple(edges))
