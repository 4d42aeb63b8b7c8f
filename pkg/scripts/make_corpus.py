"""Regenerate the bundled corpus: one file per isomorphism class of graphs on
1..5 vertices, plus a handful of small hypergraphs."""
from __future__ import annotations

import argparse
from itertools import combinations
from pathlib import Path

from freeboole.formats import format_graph, format_hypergraph
from freeboole.graphs import Hypergraph, graph_classes

HYPERGRAPHS = {
    "h3_triangle_edge": Hypergraph.from_edges(3, [(0, 1, 2)]),
    "h4_all_triples": Hypergraph.from_edges(4, list(combinations(range(4), 3))),
    "h4_mixed": Hypergraph.from_edges(4, [(0, 1), (1, 2, 3)]),
    "h4_quad": Hypergraph.from_edges(4, [(0, 1, 2, 3)]),
    "h4_two_triples": Hypergraph.from_edges(4, [(0, 1, 2), (1, 2, 3)]),
    "h5_fan": Hypergraph.from_edges(5, [(0, 1, 2), (0, 3, 4), (1, 3)]),
}


def main(argv=None) -> None:
    default = Path(__file__).resolve().parents[1] / "src" / "freeboole" / "corpus"
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=default)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for old in args.out.glob("*.txt"):
        old.unlink()
    written = 0
    for n in range(1, 6):
        for i, g in enumerate(graph_classes(n)):
            name = f"g{n}_{i:02d}.txt"
            text = format_graph(g, [f"graph class {i} on {n} vertices"])
            (args.out / name).write_text(text)
            written += 1
    for name, h in HYPERGRAPHS.items():
        (args.out / f"{name}.txt").write_text(format_hypergraph(h, [name]))
        written += 1
    print(f"wrote {written} files to {args.out}")


if __name__ == "__main__":
    main()
