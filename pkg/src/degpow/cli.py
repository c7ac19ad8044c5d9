"""Command-line front end.

Exit status: 0 on success or a passing check, 1 when a verified claim or
identity check fails (counterexamples are printed first, as graph6), 2 on
usage errors and infeasible constructions.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from typing import Sequence

from . import constructions as cons
from .claims import CLAIMS, DESK_CLAIMS, ClaimError, verify_claim
from .coloring import chromatic_number, color_critical_edges, decomposition_family, sigma
from .constructions import ConstructionError
from .counting import degree_power_sum, star_count, star_weights, subgraph_count, weighted_star_sum
from .graph import Graph, GraphError, build_graph
from .graph6 import graph6_encode, parse_graph
from .report import FORMATS, render_record, report_table
from .search import ENGINES, Objective, SearchError, biex, enumerate_free, search_max


class UsageError(Exception):
    pass


_SHORTHAND = [
    (re.compile(r"^K(\d+),(\d+)$"), lambda a, b: cons.complete_bipartite(int(a), int(b))),
    (re.compile(r"^K(\d+)$"), lambda k: cons.clique(int(k))),
    (re.compile(r"^C(\d+)$"), lambda k: cons.cycle(int(k))),
    (re.compile(r"^P(\d+)$"), lambda k: cons.path(int(k))),
    (re.compile(r"^S(\d+)$"), lambda k: cons.star(int(k))),
    (re.compile(r"^B(\d+)$"), lambda k: cons.book(int(k))),
]


def graph_arg(text: str) -> Graph:
    """graph6, ``"n: u-v,..."`` edge list, or a shorthand like K3, C5, K2,3, B3."""
    for pat, build in _SHORTHAND:
        m = pat.match(text.strip())
        if m:
            return build(*m.groups())
    return parse_graph(text)


def _construct(name: str, params: list[str], seed: int | None) -> Graph:
    try:
        ints = [int(p) for p in params if p not in cons.CLOSURES]
    except ValueError:
        raise UsageError(f"construction parameters must be integers: {params}") from None
    closures = [p for p in params if p in cons.CLOSURES]

    def need(k: int) -> list[int]:
        if len(ints) != k:
            raise UsageError(f"{name} takes {k} integer parameter(s)")
        return ints

    if name == "turan":
        return cons.turan(*need(2))
    if name == "multipartite":
        return cons.complete_multipartite(ints)
    if name == "friendship":
        return cons.friendship(*need(1))
    if name == "h":
        return cons.h_graph(*need(2))
    if name == "h-prime":
        s, t, n = need(3)
        return cons.h_prime(s, t, n, seed=seed)
    if name == "girth5":
        m, d = need(2)
        return cons.girth5_almost_regular(m, d, seed=seed)
    if name == "t0":
        if len(ints) < 2:
            raise UsageError("t0 takes a followed by part orders")
        return cons.t0_member(ints[1:], ints[0])
    if name == "theta":
        if not 1 <= len(ints) <= 2:
            raise UsageError("theta takes ell [width] [closure]")
        return cons.theta_chain(ints[0], *(ints[1:] or [2]), closure=closures[0] if closures else None)
    if name in cons.CATALOG:
        return cons.catalog(name, *ints)
    known = ["turan", "multipartite", "friendship", "h", "h-prime", "girth5", "t0", "theta", *cons.CATALOG]
    raise UsageError(f"unknown construction {name!r}; known: {', '.join(known)}")


def _objective(args) -> Objective:
    kind = args.objective.replace("-", "_")
    if kind == "edges":
        return Objective.edges()
    if kind == "degree_power":
        return Objective.degree_power(args.r)
    if kind == "star_count":
        return Objective.star_count(args.r)
    if kind == "copies":
        if args.pattern is None:
            raise UsageError("--objective copies needs --pattern")
        return Objective.copies(graph_arg(args.pattern))
    raise UsageError(f"unknown objective {args.objective!r}")


def _random_graph(rng: random.Random, nmax: int) -> Graph:
    n = rng.randint(1, nmax)
    p = rng.random()
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# -- commands -------------------------------------------------------------------


def cmd_weights(args, out) -> int:
    w = star_weights(args.r)
    if args.format == "json":
        out.write(render_record({"r": args.r, "weights": [str(x) for x in w]}, "json"))
    elif args.format == "csv":
        out.write(",".join(f"w{p}" for p in range(1, args.r + 1)) + "\n")
        out.write(",".join(map(str, w)) + "\n")
    else:
        out.write(" ".join(map(str, w)) + "\n")
    return 0


def cmd_count(args, out) -> int:
    g = graph_arg(args.graph)
    rec: dict = {"graph6": graph6_encode(g), "n": g.n, "edges": g.num_edges}
    if args.pattern:
        h = graph_arg(args.pattern)
        rec["pattern"] = graph6_encode(h)
        rec["copies"] = str(subgraph_count(h, g))
    else:
        rec["r"] = args.r
        rec["degree_power_sum"] = str(degree_power_sum(g, args.r))
        for p in range(1, args.r + 1):
            rec[f"stars_{p}"] = str(star_count(g, p))
        rec["weighted_star_sum"] = str(weighted_star_sum(g, args.r))
    out.write(render_record(rec, args.format))
    return 0


def cmd_construct(args, out) -> int:
    g = _construct(args.name, args.params, args.seed)
    if args.format == "table":
        out.write(graph6_encode(g) + "\n")
    else:
        out.write(render_record({"name": args.name, "params": args.params, "graph6": graph6_encode(g)},
                                args.format))
    return 0


def cmd_chromatic(args, out) -> int:
    g = graph_arg(args.graph)
    rec = {"graph6": graph6_encode(g), "chromatic_number": chromatic_number(g), "sigma": sigma(g)}
    out.write(render_record(rec, args.format))
    return 0


def cmd_critical(args, out) -> int:
    g = graph_arg(args.graph)
    edges = [f"{u}-{v}" for u, v in color_critical_edges(g)]
    out.write(render_record({"graph6": graph6_encode(g), "critical_edges": edges}, args.format))
    return 0


def cmd_decompose(args, out) -> int:
    g = graph_arg(args.graph)
    fam = decomposition_family(g, minimalize=not args.no_minimalize)
    rec = {"graph6": graph6_encode(g), "minimalized": fam.minimalized, "members": fam.graph6()}
    out.write(render_record(rec, args.format))
    return 0


def cmd_biex(args, out) -> int:
    g = graph_arg(args.graph)
    results = [biex(n, g, engine=args.engine, workers=args.workers) for n in args.n]
    out.write(report_table(results, args.format))
    return 0


def cmd_search(args, out) -> int:
    fam = [graph_arg(f) for f in args.forbid]
    obj = _objective(args)
    results = [
        search_max(n, fam, obj, engine=args.engine, workers=args.workers, maximal_only=args.maximal_only)
        for n in args.n
    ]
    out.write(report_table(results, args.format))
    return 0


def cmd_verify(args, out) -> int:
    claim = args.claim
    if args.desk and not claim.endswith("_desk"):
        claim += "_desk"
    extra = {k: getattr(args, k) for k in ("s", "t", "k", "a") if getattr(args, k) is not None}
    if extra and claim not in DESK_CLAIMS:
        raise UsageError(f"--{next(iter(extra))} only applies to desk claims")
    rep = verify_claim(claim, args.n, args.r, engine=args.engine, **extra)
    for g in rep.counterexamples:
        out.write(f"counterexample: {graph6_encode(g)}\n")
    rec = rep.to_record()
    if args.format == "json":
        out.write(render_record(rec, "json"))
    else:
        status = "pass" if rep.passed else "FAIL"
        flat = {"claim": rep.claim, "n": rep.n, "r": rep.r, "status": status, "checked": rep.checked}
        flat.update(rec["values"])
        if rep.note:
            flat["note"] = rep.note
        out.write(render_record(flat, args.format))
    return 0 if rep.passed else 1


def cmd_identity(args, out) -> int:
    if args.r < 1 or args.r > 20:
        raise UsageError("--r must be in 1..20")
    failures = []
    checked = 0
    if args.exhaustive:
        if args.n > 8:
            raise UsageError("--exhaustive supports --n <= 8")
        graphs = (g for m in range(1, args.n + 1) for g in enumerate_free(m))
    else:
        rng = random.Random(args.seed)
        graphs = (_random_graph(rng, args.n) for _ in range(args.samples))
    for g in graphs:
        checked += 1
        for r in range(1, args.r + 1):
            if degree_power_sum(g, r) != weighted_star_sum(g, r):
                failures.append((g, r))
    for g, r in failures:
        out.write(f"counterexample: {graph6_encode(g)} r={r}\n")
    unit = "classes" if args.exhaustive else "graphs"
    if args.format == "table":
        verdict = "identity holds" if not failures else f"identity FAILS on {len(failures)} case(s)"
        out.write(f"{checked} {unit} checked, {verdict}\n")
    else:
        rec = {"checked": checked, "unit": unit, "max_r": args.r, "failures": len(failures),
               "holds": not failures}
        out.write(render_record(rec, args.format))
    return 0 if not failures else 1


# -- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--engine", choices=ENGINES, default="auto")

    p = _Parser(prog="degpow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("weights", parents=[common], help="star weights w_1..w_r")
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("count", parents=[common], help="degree powers, stars, copies")
    s.add_argument("graph")
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--pattern")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("construct", parents=[common], help="build a named graph, print graph6")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("chromatic", parents=[common], help="chromatic number and sigma")
    s.add_argument("graph")
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("critical-edges", parents=[common], help="colour-critical edges")
    s.add_argument("graph")
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("decompose", parents=[common], help="decomposition family")
    s.add_argument("graph")
    s.add_argument("--no-minimalize", action="store_true")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("biex", parents=[common], help="Turán number of the decomposition family")
    s.add_argument("graph")
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.set_defaults(func=cmd_biex)

    s = sub.add_parser("search", parents=[common], help="exhaustive extremal search")
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.add_argument("--forbid", nargs="+", required=True)
    s.add_argument("--objective", default="edges",
                   choices=["edges", "degree-power", "star-count", "copies"])
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--pattern")
    s.add_argument("--maximal-only", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="check a claim exhaustively")
    s.add_argument("claim", help="one of: " + ", ".join(CLAIMS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--desk", action="store_true", help="run the desk-scale report")
    for opt in ("s", "t", "k", "a"):
        s.add_argument(f"--{opt}", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("identity-check", parents=[common], help="check e_r = sum_p w_p N(S_p)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--samples", type=int, default=1000)
    s.set_defaults(func=cmd_identity)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "workers", 1) < 1:
        sys.stderr.write("degpow: error: --workers must be >= 1\n")
        return 2
    if args.engine == "naive":
        ns = args.n if isinstance(getattr(args, "n", None), list) else [getattr(args, "n", 0)]
        if args.command in ("search", "biex", "verify") and max(ns) > 6:
            sys.stderr.write("degpow: error: --engine naive supports --n <= 6\n")
            return 2
    try:
        return args.func(args, out)
    except (UsageError, GraphError, ConstructionError, SearchError, ClaimError, ValueError) as exc:
        sys.stderr.write(f"degpow: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
