"""Command line front end.

Subcommands: analyze, decide, ball, witness, selftest.  Block graphs
come from small text files:

    # comment lines start with a hash
    vertices 4
    undirected
    edge 0 1
    edge 1 2
    edge 2 3
    edge 3 0

``vertices N`` must come first; an optional ``undirected`` line before
any edge makes every later ``edge U V`` stand for both arcs.  Tokens
are separated by single spaces.  Exit codes: 0 for a computed result,
1 for an analysis error, 2 for a parse error.  All output is
deterministic, so byte comparisons against recorded runs are fair.
"""

import argparse
import sys
from typing import List, Optional, Tuple

from . import amalgam, primtest, verdict
from .digraph import DiGraph, make
from .errors import BlockPrimError, ParseError

# fixed palette for orbit components (colorbrewer dark-2)
PALETTE = (
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
    "#a6761d",
    "#666666",
)


def parse_block_file(text: str) -> DiGraph:
    vertex_count: Optional[int] = None
    undirected = False
    edges: List[Tuple[int, int]] = []
    edge_set = set()

    def intval(token: str, lineno: int) -> int:
        if not token.isdigit():
            raise ParseError(lineno, f"expected a nonnegative integer, got {token!r}")
        return int(token)

    for lineno, line in enumerate(text.splitlines(), 1):
        if line.startswith("#") or line.strip() == "":
            continue
        tokens = line.split(" ")
        if any(t == "" for t in tokens):
            raise ParseError(lineno, "tokens must be separated by single spaces")
        if tokens[0] == "vertices":
            if vertex_count is not None:
                raise ParseError(lineno, "repeated vertices line")
            if len(tokens) != 2:
                raise ParseError(lineno, "usage: vertices N")
            vertex_count = intval(tokens[1], lineno)
            if vertex_count < 1:
                raise ParseError(lineno, "vertex count must be positive")
            continue
        if vertex_count is None:
            raise ParseError(lineno, "vertices line must come first")
        if tokens == ["undirected"]:
            if edges:
                raise ParseError(lineno, "undirected must come before any edge")
            if undirected:
                raise ParseError(lineno, "repeated undirected line")
            undirected = True
            continue
        if tokens[0] == "edge":
            if len(tokens) != 3:
                raise ParseError(lineno, "usage: edge U V")
            u = intval(tokens[1], lineno)
            v = intval(tokens[2], lineno)
            if u >= vertex_count or v >= vertex_count:
                raise ParseError(lineno, f"edge ({u}, {v}) leaves 0..{vertex_count - 1}")
            if u == v:
                raise ParseError(lineno, f"loop at {u}")
            arcs = [(u, v), (v, u)] if undirected else [(u, v)]
            for arc in arcs:
                if arc in edge_set:
                    raise ParseError(lineno, f"duplicate edge {arc}")
                edge_set.add(arc)
                edges.append(arc)
            continue
        raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    if vertex_count is None:
        raise ParseError(0, "missing vertices line")
    return make(vertex_count, edges)


def serialize_block(g: DiGraph) -> str:
    lines = [f"vertices {g.vertex_count}"]
    if g.edges and g.is_symmetric():
        lines.append("undirected")
        for u, v in g.edges:
            if u < v:
                lines.append(f"edge {u} {v}")
    else:
        for u, v in g.edges:
            lines.append(f"edge {u} {v}")
    return "\n".join(lines) + "\n"


def load_block(path: str) -> DiGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_block_file(fh.read())


def ball_dot(ball: amalgam.AmalgamBall) -> str:
    lines = ["digraph ball {"]
    for v in range(ball.vertex_count):
        style = "dashed" if v in ball.boundary else "solid"
        lines.append(f'  {v} [style="{style}"];')
    for u, v in ball.graph.edges:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_dot(
    ball: amalgam.AmalgamBall, report: verdict.OrbitalWitnessReport
) -> str:
    color_of = {}
    for i, comp in enumerate(report.components):
        for v in comp:
            color_of[v] = PALETTE[i % len(PALETTE)]
    lines = ["digraph orbit {"]
    for v in sorted(color_of):
        style = "filled,dashed" if v in ball.boundary else "filled"
        lines.append(f'  {v} [style="{style}" fillcolor="{color_of[v]}"];')
    for u, v in report.arcs:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_analyze(args) -> int:
    g = load_block(args.file)
    report = primtest.classify_block(g)
    from .autgrp import is_edge_transitive

    print(f"vertices: {g.vertex_count}")
    print(f"edges: {len(g.edges)}")
    print(f"symmetric: {_yesno(g.is_symmetric())}")
    print(f"aut-order: {report.aut_order}")
    print(f"vertex-transitive: {_yesno(report.vertex_transitive)}")
    print(f"edge-transitive: {_yesno(is_edge_transitive(g))}")
    print(f"primitive: {_yesno(report.primitive)}")
    print(f"regular: {_yesno(report.regular)}")
    print(f"size-ok: {_yesno(report.size_ok)}")
    return 0


def cmd_decide(args) -> int:
    g = load_block(args.file)
    decision = verdict.decide(g, args.multiplicity)
    print(f"verdict: {decision.verdict}")
    reasons = " ".join(decision.reasons) if decision.reasons else "-"
    print(f"reasons: {reasons}")
    r = decision.report
    print(f"aut-order: {r.aut_order}")
    print(f"vertex-transitive: {_yesno(r.vertex_transitive)}")
    print(f"primitive: {_yesno(r.primitive)}")
    print(f"regular: {_yesno(r.regular)}")
    print(f"size-ok: {_yesno(r.size_ok)}")
    return 0


def cmd_ball(args) -> int:
    g = load_block(args.file)
    ball = amalgam.build_ball(g, args.multiplicity, args.radius)
    print(f"block-vertices: {g.vertex_count}")
    print(f"multiplicity: {ball.multiplicity}")
    print(f"radius: {ball.radius}")
    print(f"ball-vertices: {ball.vertex_count}")
    print(f"ball-arcs: {len(ball.graph.edges)}")
    print(f"block-copies: {len(ball.registry)}")
    print(f"interior: {len(ball.interior)}")
    print(f"boundary: {len(ball.boundary)}")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(ball_dot(ball))
        print(f"dot: {args.dot}")
    return 0


def _fmt_classes(classes) -> str:
    return " ".join("{" + ",".join(str(v) for v in c) + "}" for c in classes)


def cmd_witness(args) -> int:
    g = load_block(args.file)
    ball = amalgam.build_ball(g, args.multiplicity, args.radius)
    if args.kind == "orbital":
        if args.pair:
            a, b = args.pair
        else:
            aut = ball.block_aut
            primitive, pair = primtest.is_primitive_higman(aut)
            if primitive:
                print("verdict-hint: block action is primitive, no disconnecting pair")
                return 1
            a, b = pair
        report = verdict.orbital_disconnection_witness(ball, a, b, args.max_len)
        print(f"seed: {a} {b}")
        print(f"label-components: {_fmt_classes(report.label_components)}")
        print(f"arcs: {report.arc_count}")
        print(f"touched: {report.touched}")
        print(f"components: {len(report.components)}")
        print(f"separated: {_yesno(report.separated)}")
        print(f"interior-connected: {_yesno(report.interior_connected)}")
        print(f"witness: {_yesno(report.is_witness)}")
        if args.dot:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(orbit_dot(ball, report))
            print(f"dot: {args.dot}")
        return 0
    if args.kind == "orbit-check":
        a, b = args.pair if args.pair else (0, 1)
        report = verdict.bounded_word_orbit_check(ball, a, b, max_len=args.max_len)
        print(f"pair: {a} {b}")
        print(f"alphabet: {report.alphabet}")
        print(f"max-letters: {report.max_letters}")
        print(f"words: {report.total_words}")
        print(f"evaluated: {report.evaluated}")
        print(f"skipped: {report.skipped}")
        print(f"informative: {report.informative_evaluated}")
        print(f"alpha-hits: {report.alpha_hits}")
        print(f"distance-violations: {report.distance_violations}")
        print(f"component-violations: {report.component_violations}")
        print(f"max-distance: {report.max_tree_distance}")
        print(f"clean: {_yesno(report.clean)}")
        return 0
    # propagate
    a, b = args.seed if args.seed else (0, 1)
    report = verdict.congruence_propagation(ball, a, b)
    print(f"seed: {a} {b}")
    print(f"interior-classes: {len(report.interior_classes)}")
    print(f"collapsed: {_yesno(report.collapsed)}")
    return 0


def cmd_selftest(args) -> int:
    from . import acceptance

    results = acceptance.run_all()
    failures = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        print(f"[{tag}] {res.name} ({res.elapsed:.2f}s <= {res.limit:.0f}s) {res.detail}")
        if not res.passed:
            failures += 1
    print(f"passed: {len(results) - failures}/{len(results)}")
    return 0 if failures == 0 else 1


def _pair(value: str) -> Tuple[int, int]:
    parts = value.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected U,V")
    return int(parts[0]), int(parts[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockprim",
        description="Primitivity analysis for tree-like amalgams of a block digraph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="automorphism facts of a block file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="primitivity verdict for the amalgam")
    p.add_argument("file")
    p.add_argument("--multiplicity", type=int, default=2)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("ball", help="build a finite ball and report its shape")
    p.add_argument("file")
    p.add_argument("--multiplicity", type=int, default=2)
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--dot", help="write the ball as a DOT file")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("witness", help="replayable evidence on a finite ball")
    p.add_argument("kind", choices=["orbital", "orbit-check", "propagate"])
    p.add_argument("file")
    p.add_argument("--multiplicity", type=int, default=2)
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--max-len", type=int, default=6, dest="max_len")
    p.add_argument("--pair", type=_pair, help="vertex pair U,V")
    p.add_argument("--seed", type=_pair, help="seed pair U,V for propagate")
    p.add_argument("--dot", help="write the orbit graph as a DOT file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BlockPrimError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
