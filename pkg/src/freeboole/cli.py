"""Command-line front end: ``freeboole <command> [options] FILE...``.

Reports are JSON (``"schema": 1``) with sorted keys, so identical inputs and
options give byte-identical output.  Vertex and member ids in reports are 0-based.
Exit status: 0 when every theorem check passed, 1 when one failed, 2 on budget,
parse or precondition errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from . import checks
from .algebra import (
    OMEGA, Element, PartialMap, SetAlgebra, bits_of, is_n_preserving, parse_degree,
    sikorski_extends,
)
from .compose import amalgamated_free_product_via_graphs
from .config import Budgets, default_budgets, using_budgets
from .errors import BudgetError, FreebooleError, ParseError, PreconditionError, TheoremCheckFailure
from .formats import format_hypergraph, parse_any_graph, parse_graph, parse_map
from .free import (
    anticlique_algebra, clique_algebra, independence_report, perp_hypergraph, roundtrip,
)
from .graphs import Graph, Hypergraph, complement, enumerate_anticliques, enumerate_cliques
from .invariants import invariant_report
from .topology import canonical_subbase, cmpn_upper, is_n_ary

COMMANDS = ("anticliques", "algebra", "independence", "perp", "roundtrip", "extend",
            "compose", "invariants", "topology", "verify")


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    n: str | None = None
    budgets: Budgets = field(default_factory=default_budgets)
    out: str | None = None
    seed: int = 0
    cases: int = 200
    op: str = "product"
    clique: bool = False
    nary: int | None = None
    cmpn: bool = False
    shared: str | None = None
    embed: tuple[str, ...] = ()
    timing: bool = False

    def echo(self) -> dict:
        d = asdict(self)
        for key in ("out", "timing"):
            d.pop(key)
        d["inputs"] = list(self.inputs)
        d["embed"] = list(self.embed)
        return d


@dataclass
class Outcome:
    """What a command produced: a JSON report, or raw text for ``perp``."""

    report: dict | None = None
    text: str | None = None
    passed: bool = True


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _corpus_files() -> list[Path]:
    root = resources.files("freeboole") / "corpus"
    return sorted((Path(str(p)) for p in root.iterdir() if p.name.endswith(".txt")),
                  key=lambda p: p.name)


def _expand(inputs: Sequence[str]) -> list[Path]:
    out = []
    for raw in inputs:
        p = Path(raw)
        if p.is_dir():
            out += sorted(p.glob("*.txt"))
        else:
            out.append(p)
    return out


def _input_entry(path: Path, label: str | None = None) -> dict:
    try:
        digest = _digest(path)
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path, None) from None
    return {"path": label or str(path), "sha256": digest}


def _graph_info(h) -> dict:
    if isinstance(h, Graph):
        return {"kind": "edge", "vertices": h.n, "edges": [list(e) for e in h.edges]}
    return {"kind": "hyper", "vertices": h.n, "edges": [list(bits_of(e)) for e in h.edges]}


def _single(cfg: RunConfig, count: int = 1) -> list[Path]:
    paths = _expand(cfg.inputs)
    if len(paths) != count:
        raise PreconditionError(f"'{cfg.command}' needs exactly {count} input file(s)")
    return paths


def _algebra_of(h, clique: bool):
    if clique:
        if not isinstance(h, Graph):
            raise PreconditionError("clique algebras need an edge file")
        return clique_algebra(h)
    return anticlique_algebra(h)


def _check(name: str, passed: bool, **detail) -> dict:
    return {"name": name, "passed": bool(passed), **detail}


def cmd_anticliques(cfg: RunConfig) -> dict:
    (path,) = _single(cfg)
    h = parse_any_graph(path)
    if cfg.clique:
        if not isinstance(h, Graph):
            raise PreconditionError("clique enumeration needs an edge file")
        idx = enumerate_cliques(h)
    else:
        idx = enumerate_anticliques(h)
    key = "cliques" if cfg.clique else "anticliques"
    return {"results": {"graph": _graph_info(h), "count": len(idx), key: idx.sets()},
            "checks": []}


def cmd_algebra(cfg: RunConfig) -> dict:
    (path,) = _single(cfg)
    h = parse_any_graph(path)
    a = _algebra_of(h, cfg.clique)
    return {"results": {"graph": _graph_info(h), "anticliques": len(a.index),
                        "atoms": a.algebra.num_atoms, "size": a.algebra.size,
                        "generates": a.family.generates()},
            "checks": [_check("atoms_equal_points", a.algebra.num_atoms == len(a.index))]}


def _degree_json(d):
    return "omega" if d is OMEGA else d


def cmd_independence(cfg: RunConfig) -> dict:
    (path,) = _single(cfg)
    h = parse_any_graph(path)
    a = _algebra_of(h, cfg.clique)
    rep = independence_report(a.family)
    results = {"graph": _graph_info(h), "omega_independent": rep.omega_independent,
               "degree": rep.degree, "minimal_zero_sets": [list(z) for z in rep.minimal_zero_sets],
               "violations": [list(v) for v in rep.violations]}
    if cfg.n is not None:
        n = parse_degree(cfg.n)
        results["n"] = _degree_json(n)
        results["n_independent"] = rep.is_n_independent(n)
    hyper = h.to_hypergraph() if isinstance(h, Graph) else h
    if cfg.clique:
        hyper = complement(h).to_hypergraph()
    bound = max(2, hyper.max_edge_size)
    out = [_check("degree_at_most_max_edge", rep.omega_independent and rep.degree <= bound,
                  bound=bound)]
    if hyper.is_normalized() and hyper.max_edge_size >= 2:
        out.append(_check("degree_equals_max_edge", rep.degree == hyper.max_edge_size,
                          expected=hyper.max_edge_size))
    return {"results": results, "checks": out}


def cmd_perp(cfg: RunConfig) -> str:
    (path,) = _single(cfg)
    h = parse_any_graph(path)
    perp = perp_hypergraph(_algebra_of(h, cfg.clique).family).hypergraph
    return format_hypergraph(perp, ["perp hypergraph of the vertex generators",
                                    f"source sha256 {_digest(path)}"])


def cmd_roundtrip(cfg: RunConfig) -> dict:
    paths = _expand(cfg.inputs)
    if not paths:
        raise PreconditionError("'roundtrip' needs at least one input file")
    rows, out = [], []
    for p in paths:
        rt = roundtrip(parse_any_graph(p))
        rows.append({"path": str(p), "ok": rt.ok, "same_edges": rt.same_edges,
                     "isomorphic": rt.isomorphic, "algebra_isomorphic": rt.algebra_iso})
    out.append(_check("roundtrip", all(r["ok"] for r in rows),
                      failed=[r["path"] for r in rows if not r["ok"]]))
    return {"results": {"files": rows}, "checks": out}


def cmd_extend(cfg: RunConfig) -> dict:
    gpath, mpath = _single(cfg, 2)
    h = parse_any_graph(gpath)
    mapping = parse_map(mpath)
    a = _algebra_of(h, cfg.clique)
    if mapping.generators != h.n:
        raise ParseError(f"map has {mapping.generators} generators, graph has {h.n} vertices",
                         mpath, None)
    if mapping.target_atoms < 1:
        raise ParseError("target needs at least one atom", mpath, None)
    n = parse_degree(cfg.n or "2")
    t = mapping.target_atoms
    target = SetAlgebra.powerset(t)
    imgs = [Element(t, sum(1 << j for j in im)) for im in mapping.images]
    pmap = PartialMap(a.family, target, imgs)
    rep = independence_report(a.family)
    preserving = is_n_preserving(pmap, n)
    hom = sikorski_extends(pmap)
    results = {"n": _degree_json(n), "n_independent": rep.is_n_independent(n),
               "n_preserving": preserving, "extends": hom is not None}
    if hom is not None:
        results["atom_images"] = [list(y.points) for y in hom.atom_images]
    out = []
    if rep.is_n_independent(n) and a.family.generates():
        if preserving:
            out.append(_check("n_preserving_extends", hom is not None))
        else:
            out.append(_check("non_preserving_does_not_extend", hom is None))
    return {"results": results, "checks": out}


def _parse_embedding(text: str, shared_n: int, host_n: int) -> list[int]:
    try:
        ids = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise PreconditionError(f"bad embedding {text!r}") from None
    if len(ids) != shared_n or any(not 1 <= i <= host_n for i in ids):
        raise PreconditionError(f"embedding {text!r} must list {shared_n} ids in 1..{host_n}")
    return [i - 1 for i in ids]


def cmd_compose(cfg: RunConfig) -> dict:
    paths = _expand(cfg.inputs)
    if len(paths) < 2:
        raise PreconditionError("'compose' needs at least two graph files")
    graphs = [parse_graph(p) for p in paths]
    if cfg.op == "amalgam":
        if cfg.shared is None or len(cfg.embed) != len(graphs):
            raise PreconditionError("amalgam needs --shared and one --embed per graph")
        shared = parse_graph(cfg.shared)
        embs = [_parse_embedding(e, shared.n, g.n) for e, g in zip(cfg.embed, graphs)]
        am = amalgamated_free_product_via_graphs(graphs, shared, embs, samples=cfg.cases,
                                                 seed=cfg.seed)
        results = {"op": "amalgam", "vertices": am.graph.n, "atoms": am.algebra.num_atoms,
                   "vertex_maps": [list(m) for m in am.vertex_maps],
                   "sampled_extensions": am.samples}
        out = [_check("generators_2_independent", am.independent),
               _check("restrictions_agree", am.restrictions_agree),
               _check("joint_extensions", am.failures == 0, failures=am.failures)]
        return {"results": results, "checks": out}
    if len(graphs) != 2:
        raise PreconditionError(f"--op {cfg.op} takes exactly two graph files")
    problems = checks.composition_case(*graphs)
    a, b = (anticlique_algebra(g).algebra.num_atoms for g in graphs)
    if cfg.op == "product":
        results = {"op": "product", "atoms": a + b, "generated_atoms": a + b - 1}
        wanted = {"product family atom count", "product family vs join", "direct product atom count"}
    elif cfg.op == "free":
        results = {"op": "free", "atoms": a * b}
        wanted = {"free product atom count", "free product vs disjoint union"}
    else:
        raise PreconditionError(f"unknown --op {cfg.op}")
    bad = sorted(set(problems) & wanted)
    return {"results": results, "checks": [_check(f"{cfg.op}_identity", not bad, problems=bad)]}


def cmd_invariants(cfg: RunConfig) -> dict:
    (path,) = _single(cfg)
    h = parse_any_graph(path)
    rep = invariant_report(_algebra_of(h, cfg.clique).family)
    results = asdict(rep)
    for key in ("max_pairwise_disjoint_in_family", "max_independent_subfamily"):
        size, witness = results[key]
        results[key] = {"size": size, "witness": list(witness)}
    results["notes"] = list(rep.notes)
    return {"results": results, "checks": []}


def cmd_topology(cfg: RunConfig) -> dict:
    (path,) = _single(cfg)
    h = parse_any_graph(path)
    sub = canonical_subbase(h)
    results = {"points": sub.point_count, "subbase_sets": len(sub)}
    out = []
    if cfg.nary is not None:
        r = is_n_ary(sub, cfg.nary)
        results["nary"] = {"n": cfg.nary, "is_n_ary": r.is_n_ary,
                           "counterexample": None if r.counterexample is None
                           else [sub.labels[i] for i in r.counterexample]}
    if cfg.cmpn or cfg.nary is None:
        hyper = h.to_hypergraph() if isinstance(h, Graph) else h
        bound = max(2, hyper.max_edge_size)
        try:
            value = cmpn_upper(h)
            out.append(_check("cmpn_within_edge_bound", True, bound=bound))
        except TheoremCheckFailure:
            value = None
            out.append(_check("cmpn_within_edge_bound", False, bound=bound))
        results["cmpn_upper"] = value
    return {"results": results, "checks": out}


def run_verify(graphs: Sequence[Graph], hypergraphs: Sequence[Hypergraph],
               cases: int, seed: int) -> list[dict]:
    """The theorem-check suite over the given inputs at a modest scale."""
    small = [g for g in graphs if g.n <= 3]
    topo_graphs = [g for g in graphs if g.n <= 4]
    normalized = [h for h in hypergraphs if h.is_normalized()]
    exact = [(h, h.max_edge_size) for h in normalized
             if h.max_edge_size == 3 and all(bin(e).count("1") == 3 for e in h.edges)]
    results = [
        checks.check_counting(),
        checks.check_v_plus_degree(graphs),
        checks.check_hyperedge_size(hypergraphs),
        checks.check_roundtrip(list(graphs) + normalized),
        checks.check_wire_roundtrip(list(graphs) + list(hypergraphs)),
        checks.check_sikorski(cases, seed),
        checks.check_composition(small),
        checks.check_maximality(range(1, 5), range(2, 5)),
        checks.check_bridges(cases, seed),
        checks.check_moderation(cases * 5, seed),
        checks.check_topology(topo_graphs, exact),
    ]
    bound = checks.CheckResult("cmpn_edge_bound", True, 0)
    for h in hypergraphs:
        bound.cases += 1
        try:
            cmpn_upper(h)
        except TheoremCheckFailure:
            bound.fail(checks.describe(h))
    results.append(bound)
    return [r.as_dict() for r in results]


def cmd_verify(cfg: RunConfig) -> tuple[dict, list[dict]]:
    if cfg.inputs:
        paths = _expand(cfg.inputs)
        entries = [_input_entry(p) for p in paths]
    else:
        paths = _corpus_files()
        entries = [_input_entry(p, f"corpus/{p.name}") for p in paths]
    graphs, hypergraphs = [], []
    for p in paths:
        h = parse_any_graph(p)
        (graphs if isinstance(h, Graph) else hypergraphs).append(h)
    results = run_verify(graphs, hypergraphs, cfg.cases, cfg.seed)
    return {"results": {"graphs": len(graphs), "hypergraphs": len(hypergraphs)},
            "checks": results}, entries


HANDLERS: dict[str, Callable[[RunConfig], dict]] = {
    "anticliques": cmd_anticliques, "algebra": cmd_algebra,
    "independence": cmd_independence, "roundtrip": cmd_roundtrip, "extend": cmd_extend,
    "compose": cmd_compose, "invariants": cmd_invariants, "topology": cmd_topology,
}


def run(cfg: RunConfig) -> Outcome:
    """Execute one command.  Library errors propagate to the caller."""
    if cfg.command not in COMMANDS:
        raise PreconditionError(f"unknown command {cfg.command!r}")
    start = time.perf_counter()
    with using_budgets(cfg.budgets):
        if cfg.command == "perp":
            return Outcome(text=cmd_perp(cfg))
        if cfg.command == "verify":
            body, inputs = cmd_verify(cfg)
        else:
            inputs = [_input_entry(p) for p in _expand(cfg.inputs)]
            if cfg.command == "compose" and cfg.shared:
                inputs.append(_input_entry(Path(cfg.shared)))
            body = HANDLERS[cfg.command](cfg)
    report = {"schema": 1, "command": cfg.echo(), "inputs": inputs, **body}
    report["passed"] = all(c["passed"] for c in report["checks"])
    if cfg.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    return Outcome(report=report, passed=report["passed"])


def render(outcome: Outcome) -> str:
    if outcome.text is not None:
        return outcome.text
    return json.dumps(outcome.report, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="freeboole",
                                 description="Finite free Boolean algebra toolkit.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("inputs", nargs="*", help="input files or directories")
    ap.add_argument("--n", help="degree: a positive integer or 'omega'")
    ap.add_argument("--out", help="write the report here instead of stdout")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cases", type=int, default=200, help="sampled cases per randomized check")
    ap.add_argument("--op", choices=("product", "free", "amalgam"), default="product")
    ap.add_argument("--clique", action="store_true", help="use the clique algebra")
    ap.add_argument("--nary", type=int, help="test the canonical subbase for n-arity")
    ap.add_argument("--cmpn", action="store_true", help="report the compactness-number bound")
    ap.add_argument("--shared", help="shared subgraph file for --op amalgam")
    ap.add_argument("--embed", action="append", default=[],
                    help="comma-separated 1-based images of the shared vertices, once per graph")
    ap.add_argument("--anticlique-cap", type=int)
    ap.add_argument("--subset-budget", type=int, help="node limit for subset searches")
    ap.add_argument("--algebra-budget", type=int, help="largest algebra searched exhaustively")
    ap.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    budgets = default_budgets()
    overrides = {"anticlique_cap": args.anticlique_cap, "search_nodes": args.subset_budget,
                 "algebra_size": args.algebra_budget}
    budgets = replace(budgets, **{k: v for k, v in overrides.items() if v is not None})
    if args.n is not None:
        parse_degree(args.n)
    return RunConfig(command=args.command, inputs=tuple(args.inputs), n=args.n,
                     budgets=budgets, out=args.out, seed=args.seed, cases=args.cases,
                     op=args.op, clique=args.clique, nary=args.nary, cmpn=args.cmpn,
                     shared=args.shared, embed=tuple(args.embed), timing=args.timing)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        cfg = config_from_args(args)
        outcome = run(cfg)
    except TheoremCheckFailure as exc:
        print(f"theorem check failed: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (FreebooleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(outcome)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if outcome.passed else 1


if __name__ == "__main__":
    sys.exit(main())
