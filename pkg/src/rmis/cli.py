"""Command-line front end.

Exit codes: 0 for a positive result (set found, predicate holds, valid
simulation), 1 for a negative one, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import abctree, classify, findrmis, generators, localsim, oracle
from .graph import EdgeListParseError, Graph, GraphError, from_edge_list, to_edge_list


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return from_edge_list(text)


def _node_key(x: abctree.AbcNode) -> str:
    return str(x)


def _labels_json(run: findrmis.LabelingRun) -> dict:
    return {
        _node_key(node): {tag: sorted(w) for tag, w in sorted(tags.items())}
        for node, tags in sorted(run.labels.items())
    }


def _cmd_classify(args) -> int:
    g = _read_graph(args.file)
    verdict = classify.in_rmis_forall(g)
    payload = {
        "complete_bipartite": verdict.complete_bipartite,
        "sputnik": verdict.sputnik,
        "rmis_forall": verdict.rmis_forall,
    }
    if verdict.bipartition is not None:
        payload["bipartition"] = [sorted(verdict.bipartition[0]), sorted(verdict.bipartition[1])]
    print(json.dumps(payload))
    return 0 if verdict.rmis_forall else 1


def _cmd_abc(args) -> int:
    g = _read_graph(args.file)
    t = abctree.build_abc_tree(g)
    if args.dot:
        print(abctree.tree_to_dot(t), end="")
        return 0
    if args.dot_graph:
        print(abctree.decomposition_dot(g), end="")
        return 0
    if t.component_nodes():
        rt = abctree.root_at(t, abctree.default_root(t))
        print(abctree.render_text(rt), end="")
    else:
        for node in t.nodes:
            print(node)
    return 0


def _cmd_find(args) -> int:
    g = _read_graph(args.file)
    run = findrmis.run_labeling(g)
    if args.json:
        print(
            json.dumps(
                {
                    "exists": run.result is not None,
                    "set": sorted(run.result) if run.result is not None else None,
                    "labels": _labels_json(run),
                }
            )
        )
    elif args.trace:
        if run.rooted is not None:
            def annotate(x):
                tags = run.labels.get(x, {})
                return " ".join(f"{t}{sorted(w)}" for t, w in sorted(tags.items())) or "-"

            print(abctree.render_text(run.rooted, annotate), end="")
        for line in run.anomalies:
            print(f"note: {line}")
        print(oracle.format_vertex_set(run.result) if run.result is not None else "NO-RMIS")
    else:
        print(oracle.format_vertex_set(run.result) if run.result is not None else "NO-RMIS")
    return 0 if run.result is not None else 1


def _cmd_verify(args) -> int:
    g = _read_graph(args.file)
    s = oracle.parse_vertex_set(args.set)
    if args.brute:
        ok = oracle.is_robust_mis_bruteforce(g, s, max_removable=args.max_removable)
    else:
        ok = oracle.is_robust_mis(g, s)
    print("ROBUST" if ok else "NOT-ROBUST")
    return 0 if ok else 1


def _cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    sets = oracle.enumerate_robust_mis(g, max_vertices=args.max_vertices)
    for s in sets:
        print(oracle.format_vertex_set(s))
    print(f"# {len(sets)} robust MIS(s)", file=sys.stderr)
    return 0 if sets else 1


def _cmd_gen(args) -> int:
    family = args.family
    if family == "gk":
        inst = generators.gen_gk(args.k)
        if args.json:
            print(
                json.dumps(
                    {
                        "edges": [list(e) for e in inst.graph.edges()],
                        "names": inst.names,
                        "m1": sorted(inst.m1),
                        "m2": sorted(inst.m2),
                    }
                )
            )
            return 0
        g = inst.graph
    elif family == "complete-bipartite":
        g = generators.gen_complete_bipartite(args.m, args.n)
    elif family == "cycle":
        g = generators.gen_cycle(args.n)
    elif family == "path":
        g = generators.gen_path(args.n)
    elif family == "bull":
        g = generators.gen_bull()
    elif family == "triangle":
        g = generators.gen_triangle()
    elif family == "square":
        g = generators.gen_square()
    elif family == "lollipop":
        g = generators.gen_lollipop(args.path_len, args.clique_size)
    elif family == "random-connected":
        g = generators.gen_random_connected(args.n, args.edge_prob, args.seed)
    elif family == "random-sputnik":
        g = generators.gen_random_sputnik(args.seed, args.size)
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown family {family}")
    print(to_edge_list(g), end="")
    return 0


def _cmd_simulate(args) -> int:
    g = _read_graph(args.file)
    if args.ids == "identity":
        ids = localsim.identity_ids(g)
    elif args.ids.startswith("random:"):
        ids = localsim.random_ids(g, int(args.ids.split(":", 1)[1]))
    else:
        raise GraphError(f"bad --ids value {args.ids!r}; use identity or random:<seed>")
    result = localsim.run_sync(g, localsim.rmis_forall_program(), ids, args.max_rounds)
    chosen = {v for v, out in result.outputs.items() if out == localsim.IN}
    valid = oracle.is_mis(g, chosen)
    print(
        json.dumps(
            {
                "outputs": {str(v): out for v, out in sorted(result.outputs.items())},
                "rounds_total": result.rounds_total,
                "per_node_rounds": {
                    str(v): r for v, r in sorted(result.termination_round.items())
                },
                "valid_mis": valid,
            }
        )
    )
    return 0 if valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmis",
        description="Robust maximal independent sets: classify, decompose, find, verify, simulate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="complete-bipartite / sputnik / all-MISs-robust verdict")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("abc", help="print the ABC decomposition tree")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit the tree as DOT")
    p.add_argument("--dot-graph", action="store_true", help="emit the graph as DOT, colored by role")
    p.set_defaults(fn=_cmd_abc)

    p = sub.add_parser("find", help="compute a robust MIS if one exists")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="dump the labeled tree")
    p.set_defaults(fn=_cmd_find)

    p = sub.add_parser("verify", help="check a candidate set for robustness")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--brute", action="store_true", help="enumerate connected spanning subgraphs")
    p.add_argument("--max-removable", type=int, default=oracle.DEFAULT_REMOVABLE_CAP)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="enumerate every robust MIS (small graphs)")
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=oracle.DEFAULT_VERTEX_CAP)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a named instance as an edge list")
    gsub = p.add_subparsers(dest="family", required=True)
    q = gsub.add_parser("gk")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--json", action="store_true", help="also emit the name map and both solutions")
    q = gsub.add_parser("complete-bipartite")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = gsub.add_parser("cycle")
    q.add_argument("--n", type=int, required=True)
    q = gsub.add_parser("path")
    q.add_argument("--n", type=int, required=True)
    gsub.add_parser("bull")
    gsub.add_parser("triangle")
    gsub.add_parser("square")
    q = gsub.add_parser("lollipop")
    q.add_argument("--path-len", type=int, required=True)
    q.add_argument("--clique-size", type=int, required=True)
    q = gsub.add_parser("random-connected")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--edge-prob", type=float, required=True)
    q.add_argument("--seed", type=int, required=True)
    q = gsub.add_parser("random-sputnik")
    q.add_argument("--size", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("simulate", help="run the distributed program in lock-step rounds")
    p.add_argument("file")
    p.add_argument("--ids", default="identity", help="identity or random:<seed>")
    p.add_argument("--max-rounds", type=int, default=None)
    p.set_defaults(fn=_cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, EdgeListParseError, OSError, localsim.SimulationTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
