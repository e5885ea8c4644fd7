"""``flipcut`` command line: queries, oracle cross-checks, generators, SVG."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import convex, core, generators, io, oracle, render
from .geometry import GeometryError, make_edge, require_edge
from .triangulation import SizeBoundExceeded, TriangulationError, enum_bound


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _pairs(flat: Sequence[int] | None, what: str) -> list[tuple[int, int]]:
    flat = flat or []
    if len(flat) % 2:
        raise UsageError(f"{what} takes index pairs")
    return [make_edge(flat[t], flat[t + 1]) for t in range(0, len(flat), 2)]


def _b(x: bool) -> str:
    return "true" if x else "false"


def _emit(out: TextIO, obj) -> None:
    out.write(json.dumps(obj) + "\n")


# -- verbs ------------------------------------------------------------------

def cmd_test_edge(a, out):
    P = io.read_points(a.file)
    rep = core.analyze_edge(P, a.edge)
    if a.json:
        _emit(out, rep.to_json())
    else:
        out.write(f"flip_cut: {_b(rep.flip_cut)}, components: {rep.component_count}\n")


def cmd_all_edges(a, out):
    P = io.read_points(a.file)
    found = sorted(core.all_flip_cut_edges(P, parallel=a.parallel))
    if a.json:
        _emit(out, {"flip_cut_edges": [list(e) for e in found]})
    else:
        out.write("".join(f"{i} {j}\n" for i, j in found))


def cmd_components(a, out):
    P = io.read_points(a.file)
    _emit(out, core.analyze_edge(P, a.edge).to_json())


def cmd_same_component(a, out):
    P = io.read_points(a.file)
    e = require_edge(P, a.edge)
    T1 = io.read_triangulation(a.t1, P)
    T2 = io.read_triangulation(a.t2, P)
    same = core.same_component(P, e, T1, T2)
    _emit(out, {"edge": list(e), "same_component": same})


def cmd_oracle(a, out):
    P = io.read_points(a.file)
    bound = enum_bound()
    X = _pairs(a.forbid, "--forbid")
    if a.edge:
        X.append(require_edge(P, a.edge))
    if a.query == "same-component":
        if not X or not (a.t1 and a.t2):
            raise UsageError("same-component needs --edge or --forbid, and --t1, --t2")
        T1 = io.read_triangulation(a.t1, P)
        T2 = io.read_triangulation(a.t2, P)
        g = oracle.bf_flip_graph(P, X, bound)
        labels = g.labels()
        if T1 not in labels or T2 not in labels:
            raise TriangulationError("a triangulation uses a forbidden edge")
        _emit(out, {"forbidden": [list(e) for e in X], "same_component": labels[T1] == labels[T2],
                    "oracle": True})
        return
    if not X:
        raise UsageError(f"{a.query} needs --edge or --forbid")
    res = oracle.bf_is_flip_cut(P, X, bound)
    obj = res.to_json(X)
    if a.query == "components":
        g = oracle.bf_flip_graph(P, X, bound)
        obj["component_sizes"] = [len(c) for c in g.components()]
    _emit(out, obj)


def cmd_gen(a, out):
    p = a.params
    fam = a.family

    def need(k):
        if len(p) != k:
            raise UsageError(f"gen {fam} takes {k} integer parameter(s)")

    if fam == "grid":
        need(2)
        F = generators.Family(generators.gen_grid(*p), {"grid": f"{p[0]}x{p[1]}, index = y*{p[0]} + x"})
    elif fam == "convex":
        need(1)
        F = generators.Family(generators.gen_convex(p[0]))
    elif fam == "channel":
        need(1)
        F = generators.gen_channel(p[0])
    elif fam == "hourglass":
        need(1)
        F = generators.gen_hourglass(p[0])
    else:  # random
        need(2)
        P = generators.gen_random(p[0], p[1], a.seed, allow_collinear=not a.no_collinear)
        F = generators.Family(P, {"seed": a.seed})
    out.write(io.format_points(F.points, F.comment_lines()))


def cmd_convex_cutset(a, out):
    T, X, T2 = convex.zigzag_cut_set(a.n)
    _emit(out, {
        "n": a.n,
        "T": [list(c) for c in sorted(convex.chords_of(T))],
        "X": [list(c) for c in sorted(X)],
        "T2": [list(c) for c in sorted(convex.chords_of(T2))],
    })


def cmd_connect_convex(a, out):
    X = _pairs(a.forbid, "--forbid")
    S = io.read_edges(a.from_)
    T = io.read_edges(a.to)
    path = convex.connect_avoiding(a.n, X, S, T)
    convex.check_path(path, X)
    _emit(out, path.to_json())


def cmd_render(a, out):
    P = io.read_points(a.file)
    edges = io.read_triangulation(a.edges, P).edges if a.edges else ()
    hi = core.all_flip_cut_edges(P) if a.highlight_flip_cut else ()
    svg = render.render_svg(P, edges, hi)
    if a.output == "-":
        out.write(svg)
    else:
        with open(a.output, "w") as fh:
            fh.write(svg)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="flipcut", description="Flip cut edges of planar point sets.")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def edge_arg(p, required=True):
        p.add_argument("--edge", nargs=2, type=int, metavar=("I", "J"), required=required)

    p = sub.add_parser("test-edge", help="decide whether one edge is a flip cut edge")
    p.add_argument("file")
    edge_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_test_edge)

    p = sub.add_parser("all-edges", help="list every flip cut edge")
    p.add_argument("file")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_all_edges)

    p = sub.add_parser("components", help="components of Z for one edge, as JSON")
    p.add_argument("file")
    edge_arg(p)
    p.set_defaults(fn=cmd_components)

    p = sub.add_parser("same-component", help="do two triangulations avoiding e connect")
    p.add_argument("file")
    edge_arg(p)
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.set_defaults(fn=cmd_same_component)

    p = sub.add_parser("oracle", help="brute-force flip graph queries (small inputs)")
    p.add_argument("query", choices=["flip-cut", "components", "same-component"])
    p.add_argument("file")
    edge_arg(p, required=False)
    p.add_argument("--forbid", nargs="+", type=int, metavar="I J")
    p.add_argument("--t1")
    p.add_argument("--t2")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("gen", help="generate a point set family")
    p.add_argument("family", choices=["grid", "convex", "channel", "hourglass", "random"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-collinear", action="store_true")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("convex-cutset", help="zigzag flip cut set of size n - 3")
    p.add_argument("n", type=int)
    p.set_defaults(fn=cmd_convex_cutset)

    p = sub.add_parser("connect-convex", help="flip path avoiding forbidden chords")
    p.add_argument("n", type=int)
    p.add_argument("--forbid", nargs="*", type=int, default=[], metavar="I J")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(fn=cmd_connect_convex)

    p = sub.add_parser("render", help="SVG drawing of a point set")
    p.add_argument("file")
    p.add_argument("--highlight-flip-cut", action="store_true")
    p.add_argument("--edges", help="triangulation file to draw")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_render)
    return ap


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        if getattr(args, "edge", None) is not None:
            args.edge = make_edge(*args.edge)
        args.fn(args, out)
    except UsageError as ex:
        err.write(f"{ex}\n")
        return 2
    except (GeometryError, TriangulationError, convex.ConvexError, generators.GenerationError,
            SizeBoundExceeded, OSError, ValueError) as ex:
        _emit(err, {"error": type(ex).__name__, "message": str(ex)})
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
