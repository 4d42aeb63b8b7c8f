"""DIMACS-like text formats for graphs, hypergraphs, orders and generator maps.

Header ``p edge|hyper|order|map ...``; body ``e u v``, ``h v1 ... vk``,
``r u v`` (u < v) or ``m i j1 ... jk``; ``c`` starts a comment.  Ids are 1-based
in files and 0-based in memory.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .algebra import bits_of
from .errors import ParseError
from .graphs import AnyGraph, Graph, Hypergraph, Poset

KINDS = ("edge", "hyper", "order", "map")


@dataclass(frozen=True)
class Parsed:
    kind: str
    header: tuple[int, ...]
    lines: tuple[tuple[int, str, tuple[int, ...]], ...]  # (line number, tag, ints)


def _tokens(text: str, path) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        yield no, parts


def _ints(parts: list[str], path, no: int) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", path, no) from None


def parse_text(text: str, path=None, expect: str | None = None) -> Parsed:
    header = None
    kind = None
    body = []
    for no, parts in _tokens(text, path):
        if parts[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", path, no)
            if len(parts) < 2 or parts[1] not in KINDS:
                raise ParseError("malformed header", path, no)
            kind = parts[1]
            header = _ints(parts[2:], path, no)
            if len(header) != 2 or min(header) < 0:
                raise ParseError("header needs two non-negative counts", path, no)
            if expect is not None and kind != expect:
                raise ParseError(f"expected a '{expect}' file, found '{kind}'", path, no)
            continue
        if header is None:
            raise ParseError("body line before header", path, no)
        body.append((no, parts[0], _ints(parts[1:], path, no)))
    if header is None:
        raise ParseError("missing header", path, None)
    return Parsed(kind, header, tuple(body))


def _vertices(ids: tuple[int, ...], n: int, path, no: int) -> list[int]:
    out = []
    for i in ids:
        if not 1 <= i <= n:
            raise ParseError(f"id {i} out of range 1..{n}", path, no)
        out.append(i - 1)
    return out


def _expect_tag(tag: str, want: str, path, no: int):
    if tag != want:
        raise ParseError(f"unexpected line type '{tag}' (want '{want}')", path, no)


def _read(source) -> tuple[str, object]:
    p = Path(source)
    try:
        return p.read_text(), p
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", p, None) from None


def graph_from_text(text: str, path=None) -> Graph:
    parsed = parse_text(text, path, "edge")
    n = parsed.header[0]
    edges = set()
    for no, tag, ids in parsed.lines:
        _expect_tag(tag, "e", path, no)
        if len(ids) != 2:
            raise ParseError("edge line needs two ids", path, no)
        u, v = _vertices(ids, n, path, no)
        if u == v:
            raise ParseError("loop edge", path, no)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def hypergraph_from_text(text: str, path=None) -> Hypergraph:
    parsed = parse_text(text, path, "hyper")
    n = parsed.header[0]
    edges = set()
    for no, tag, ids in parsed.lines:
        _expect_tag(tag, "h", path, no)
        vs = set(_vertices(ids, n, path, no))
        if len(vs) < 2:
            raise ParseError("hyperedge needs at least two distinct vertices", path, no)
        edges.add(tuple(sorted(vs)))
    return Hypergraph.from_edges(n, sorted(edges))


def poset_from_text(text: str, path=None) -> Poset:
    parsed = parse_text(text, path, "order")
    n = parsed.header[0]
    reach = [1 << u for u in range(n)]  # reflexive reachability, grown per line
    pairs = []
    for no, tag, ids in parsed.lines:
        _expect_tag(tag, "r", path, no)
        if len(ids) != 2:
            raise ParseError("order line needs two ids", path, no)
        u, v = _vertices(ids, n, path, no)
        if reach[v] >> u & 1:
            raise ParseError(f"relation {u + 1} < {v + 1} closes a cycle", path, no)
        pairs.append((u, v))
        for w in range(n):
            if reach[w] >> u & 1:
                reach[w] |= reach[v]
    return Poset.from_relations(n, pairs)


def any_graph_from_text(text: str, path=None) -> AnyGraph:
    kind = parse_text(text, path).kind
    if kind == "edge":
        return graph_from_text(text, path)
    if kind == "hyper":
        return hypergraph_from_text(text, path)
    raise ParseError(f"expected an edge or hyper file, found '{kind}'", path, None)


@dataclass(frozen=True)
class MapSpec:
    """Image of each generator as a set of target atoms (0-based)."""

    generators: int
    target_atoms: int
    images: tuple[tuple[int, ...], ...]


def map_from_text(text: str, path=None) -> MapSpec:
    parsed = parse_text(text, path, "map")
    g, t = parsed.header
    images: list[tuple[int, ...] | None] = [None] * g
    for no, tag, ids in parsed.lines:
        _expect_tag(tag, "m", path, no)
        if not ids:
            raise ParseError("map line needs a generator id", path, no)
        (i,) = _vertices(ids[:1], g, path, no)
        if images[i] is not None:
            raise ParseError(f"generator {i + 1} mapped twice", path, no)
        images[i] = tuple(sorted(set(_vertices(ids[1:], t, path, no))))
    missing = [i + 1 for i, im in enumerate(images) if im is None]
    if missing:
        raise ParseError(f"no image for generators {missing}", path, None)
    return MapSpec(g, t, tuple(images))


def parse_graph(path) -> Graph:
    return graph_from_text(*_read(path))


def parse_hypergraph(path) -> Hypergraph:
    return hypergraph_from_text(*_read(path))


def parse_poset(path) -> Poset:
    return poset_from_text(*_read(path))


def parse_any_graph(path) -> AnyGraph:
    return any_graph_from_text(*_read(path))


def parse_map(path) -> MapSpec:
    return map_from_text(*_read(path))


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = g.edges
    lines.append(f"p edge {g.n} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p hyper {h.n} {len(h.edges)}")
    lines += ["h " + " ".join(str(v + 1) for v in bits_of(e)) for e in h.edges]
    return "\n".join(lines) + "\n"
