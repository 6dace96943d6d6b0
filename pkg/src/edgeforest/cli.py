"""Command-line front end.

Family specs use the grammar ``name:p1,p2,...``::

    star:N  triangle  gs:A,B,C  gsplus:A,B,C  paw:A  di:A  k4:A  k:N  kst:S,T

Exit codes: 0 success, 1 usage or parse error, 2 size guard exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .collisions import report_to_dict, report_to_text, sweep, verify_known
from .families import FamilyError, FamilySpec, classify, construct_family, unclassified_reason
from .formulas import p1_family
from .graph import Graph, GraphError, TooLarge, parse_edge_list, parse_graph6, strip_isolated
from .process import (
    BRUTE_FORCE_MAX_EDGES,
    SUBSET_DP_MAX_VERTICES,
    TreeDistribution,
    estimate_with_stderr,
    exact_bruteforce,
    exact_subset_dp,
    monte_carlo,
)

EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_graph(args) -> tuple[Graph, FamilySpec | None, dict]:
    if args.family:
        spec = FamilySpec.parse(args.family)
        return construct_family(spec), spec, {"family": str(spec)}
    if not args.file:
        raise UsageError("give --family or --file")
    path = Path(args.file)
    text = path.read_text()
    fmt = args.format
    if fmt == "auto":
        fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edges"
    g = parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)
    return g, None, {"file": str(path), "format": fmt}


def _frac(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator), "decimal": float(x)}


def _dist_lines(dist: TreeDistribution) -> list[str]:
    return [f"{k}: {v.numerator}/{v.denominator}  ({float(v):.10f})" for k, v in dist.items()]


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        doc = {"tool": "edgeforest", "version": __version__, **doc}
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))


def cmd_compute(args) -> int:
    g, spec, source = _load_graph(args)
    engine = args.engine
    if engine == "auto":
        if spec is None and g.m and all(d > 0 for d in g.degrees()):
            spec = classify(g)
        if spec is not None and spec.kind != "bipartite":
            engine = "formula"
        elif g.n <= SUBSET_DP_MAX_VERTICES:
            engine = "dp"
        elif g.m <= BRUTE_FORCE_MAX_EDGES:
            engine = "brute"
        else:
            raise TooLarge("graph too large for every exact engine; use --engine mc")
    if engine == "formula":
        if spec is None:
            s = classify(strip_isolated(g)) if g.m else None
            if s is None:
                raise UsageError("no closed form known for this graph")
            spec = s
        if spec.kind == "bipartite":
            print("warning: the printed K_{s,t} expression is not normalized; "
                  "use --engine dp for exact values", file=sys.stderr)
        dist = p1_family(spec)
    elif engine == "brute":
        dist = exact_bruteforce(g, workers=args.workers, force=args.force)
    elif engine == "dp":
        dist = exact_subset_dp(g, force=args.force)
    elif engine == "mc":
        return cmd_simulate(args)
    else:
        raise UsageError(f"unknown engine {engine}")
    doc = {
        "input": source,
        "engine": engine,
        "vertices": g.n,
        "edges": g.m,
        "distribution": {str(k): _frac(v) for k, v in dist.items()},
    }
    _emit(args, doc, [f"engine: {engine}"] + _dist_lines(dist))
    return 0


def cmd_simulate(args) -> int:
    g, _, source = _load_graph(args)
    est = monte_carlo(g, args.trials, args.seed, workers=args.workers)
    rows = {k: estimate_with_stderr(est, k) for k in sorted(est.counts)}
    doc = {
        "input": source,
        "engine": "mc",
        "trials": est.trials,
        "seed": str(est.seed),
        "workers": est.workers,
        "counts": {str(k): c for k, c in est.counts.items()},
        "estimates": {str(k): {"point": p, "stderr": se} for k, (p, se) in rows.items()},
    }
    lines = [f"seed: {est.seed}", f"trials: {est.trials}", f"workers: {est.workers}"]
    lines += [f"{k}: {p:.6f} +/- {se:.6f}" for k, (p, se) in rows.items()]
    _emit(args, doc, lines)
    return 0


def cmd_classify(args) -> int:
    g, _, source = _load_graph(args)
    g = strip_isolated(g)
    spec = classify(g)
    label = str(spec) if spec else f"unclassified ({unclassified_reason(g)})"
    _emit(args, {"input": source, "classification": label}, [label])
    return 0


def cmd_formula(args) -> int:
    spec = FamilySpec.parse(args.family)
    dist = p1_family(spec)
    doc = {"input": {"family": str(spec)}, "engine": "formula",
           "distribution": {str(k): _frac(v) for k, v in dist.items()}}
    lines = [f"formula: {spec}"] + _dist_lines(dist)
    total = dist.total()
    if total != 1:
        doc["total"] = _frac(total)
        lines.append(f"warning: values sum to {total}, not 1")
    _emit(args, doc, lines)
    return 0


def cmd_search(args) -> int:
    report = sweep(args.family, args.max_vertices, args.engine, workers=args.workers)
    if args.json or (args.output and args.output.endswith(".json")):
        body = json.dumps({"tool": "edgeforest", "version": __version__,
                           **report_to_dict(report)}, indent=2) + "\n"
    else:
        body = report_to_text(report)
    if args.output:
        Path(args.output).write_text(body)
        print(f"{len(report.groups)} groups written to {args.output}")
    else:
        sys.stdout.write(body)
    return 0


def cmd_verify_known(args) -> int:
    items = verify_known(args.max_t)
    failed = [i for i in items if not i.passed]
    doc = {
        "max_t": args.max_t,
        "items": [
            {"label": i.label, "members": [str(m) for m in i.members],
             "p1": [_frac(p) for p in i.p1], "passed": i.passed}
            for i in items
        ],
        "failed": len(failed),
    }
    lines = [f"{'PASS' if i.passed else 'FAIL'} {i.label}: P(G,1) = {i.p1[0]}" for i in items]
    lines.append(f"{len(items) - len(failed)}/{len(items)} passed")
    _emit(args, doc, lines)
    return EXIT_VERIFY if failed else 0


def _graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec, e.g. gs:8,1,1 or paw:3")
    src.add_argument("--file", help="edge-list or graph6 file")
    p.add_argument("--format", choices=("auto", "edges", "graph6"), default="auto",
                   help="file format (auto: .g6/.graph6 means graph6)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgeforest", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--workers", type=int, default=1, help="worker processes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="exact tree-count distribution")
    _graph_source(p)
    p.add_argument("--engine", choices=("auto", "brute", "dp", "mc", "formula"), default="auto")
    p.add_argument("--force", action="store_true", help="ignore exact-engine size guards")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo estimate")
    _graph_source(p)
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("classify", parents=[common], help="name the two-tree family of a graph")
    _graph_source(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("formula", parents=[common], help="closed-form distribution of a family member")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("search", parents=[common], help="find families with equal profiles")
    p.add_argument("--family", default="all",
                   choices=("gs", "gsplus", "paw", "di", "k4", "all"))
    p.add_argument("--max-vertices", type=int, default=100)
    p.add_argument("--engine", choices=("formula", "dp"), default="formula")
    p.add_argument("--output", help="write the report here (.json for JSON)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-known", parents=[common], help="check the known equal-profile families")
    p.add_argument("--max-t", type=int, default=10)
    p.set_defaults(func=cmd_verify_known)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, FamilyError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
