"""Least freeness degree of small algebras, by exhaustive search.

Rows: powerset algebras P(k) and anticlique algebras of the hypergraphs
<k, all m-subsets>.  For the latter the degree of the vertex generators is listed
next to the least degree over all generating families.  Values are data; no
bound is asserted beyond what the library checks itself.
"""
from __future__ import annotations

import argparse
import json
from itertools import combinations

from freeboole.algebra import SetAlgebra
from freeboole.errors import BudgetError
from freeboole.free import anticlique_algebra, freeness_search, independence_report
from freeboole.graphs import Hypergraph


def _row(label, algebra, budget, extra=None):
    row = {"algebra": label, "atoms": algebra.num_atoms, **(extra or {})}
    try:
        found = freeness_search(algebra, budget=budget)
        row["least_degree"] = None if found is None else str(found[0])
        row["witness_size"] = None if found is None else len(found[1])
    except BudgetError as exc:
        row["least_degree"] = None
        row["skipped"] = str(exc)
    return row


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-powerset", type=int, default=6)
    ap.add_argument("--max-k", type=int, default=5)
    ap.add_argument("--budget", type=int, default=256, help="largest algebra searched")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rows = [_row(f"P({k})", SetAlgebra.powerset(k), args.budget)
            for k in range(1, args.max_powerset + 1)]
    for k in range(2, args.max_k + 1):
        for m in range(2, k + 1):
            h = Hypergraph.from_edges(k, list(combinations(range(k), m)))
            a = anticlique_algebra(h)
            vdeg = independence_report(a.family).degree
            rows.append(_row(f"<{k},[{k}]^{m}>", a.algebra, args.budget, {"v_plus_degree": vdeg}))

    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return
    print(f"{'algebra':<14}{'atoms':>6}{'V+ degree':>11}{'least degree':>14}")
    for r in rows:
        least = r["least_degree"] if r["least_degree"] is not None else "-"
        print(f"{r['algebra']:<14}{r['atoms']:>6}{str(r.get('v_plus_degree', '')):>11}{least:>14}")


if __name__ == "__main__":
    main()
