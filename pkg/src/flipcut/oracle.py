"""Brute-force ground truth: exhaustive flip graphs, line graphs of crossing
edges, the EC5-free shortcut and the lattice criterion for grids."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

from .geometry import (
    Edge,
    GeometryError,
    PointSet,
    crossing_edges,
    is_ec3,
    is_ec5,
    make_edge,
    orient,
    on_closed_segment,
    require_edge,
    segments_cross,
)
from .core import z_edges
from .triangulation import Triangulation, flips, iter_triangulations


@dataclass
class FlipGraph:
    nodes: list[Triangulation]
    adjacency: list[tuple[int, int]]
    forbidden: frozenset[Edge] = frozenset()
    neighbors: list[list[int]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self.neighbors:
            self.neighbors = [[] for _ in self.nodes]
            for a, b in self.adjacency:
                self.neighbors[a].append(b)
                self.neighbors[b].append(a)

    def components(self) -> list[list[int]]:
        """Connected components by BFS from the lowest unvisited node."""
        seen = [False] * len(self.nodes)
        out = []
        for s in range(len(self.nodes)):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            dq = deque([s])
            while dq:
                x = dq.popleft()
                for y in self.neighbors[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        dq.append(y)
            out.append(sorted(comp))
        return out

    def labels(self) -> dict[Triangulation, int]:
        return {self.nodes[x]: c for c, comp in enumerate(self.components()) for x in comp}


@lru_cache(maxsize=8)
def _full_flip_graph(P: PointSet, bound: int | None) -> FlipGraph:
    nodes = list(iter_triangulations(P, bound))
    index = {T: t for t, T in enumerate(nodes)}
    adj = []
    for t, T in enumerate(nodes):
        for m in flips(T):
            s = index[T.with_flip(m.removed, m.added)]
            if s > t:
                adj.append((t, s))
    return FlipGraph(nodes, adj)


def bf_flip_graph(P: PointSet, X: Iterable[Sequence[int]] = (), bound: int | None = None) -> FlipGraph:
    """Flip graph induced on the triangulations that use no edge of ``X``."""
    full = _full_flip_graph(P, bound)
    X = frozenset(make_edge(*f) for f in X)
    if not X:
        return full
    keep = [t for t, T in enumerate(full.nodes) if not (X & T.edge_set)]
    remap = {t: s for s, t in enumerate(keep)}
    adj = [(remap[a], remap[b]) for a, b in full.adjacency if a in remap and b in remap]
    return FlipGraph([full.nodes[t] for t in keep], adj, X)


@dataclass(frozen=True)
class OracleResult:
    flip_cut: bool
    component_count: int
    labels: dict = field(compare=False, repr=False)
    node_count: int = 0

    def to_json(self, edges: Sequence[Edge] = ()) -> dict:
        out = {
            "flip_cut": self.flip_cut,
            "component_count": self.component_count,
            "oracle": True,
            "node_count": self.node_count,
        }
        if len(edges) == 1:
            out["edge"] = list(edges[0])
        elif edges:
            out["forbidden"] = [list(e) for e in edges]
        return out


def bf_is_flip_cut(P: PointSet, X: Iterable[Sequence[int]], bound: int | None = None) -> OracleResult:
    """Whether forbidding ``X`` disconnects the flip graph (an empty graph is not a cut)."""
    g = bf_flip_graph(P, X, bound)
    comps = g.components()
    labels = {g.nodes[x]: c for c, comp in enumerate(comps) for x in comp}
    return OracleResult(len(comps) >= 2, len(comps), labels, len(g.nodes))


def line_graph_components(edges: Iterable[Edge]) -> list[set[Edge]]:
    """Components of the line graph (two edges adjacent iff they share an endpoint)."""
    edges = sorted(set(edges))
    by_point: dict[int, list[Edge]] = {}
    for f in edges:
        for p in f:
            by_point.setdefault(p, []).append(f)
    seen: set[Edge] = set()
    out = []
    for f in edges:
        if f in seen:
            continue
        comp = {f}
        seen.add(f)
        stack = [f]
        while stack:
            g = stack.pop()
            for p in g:
                for h in by_point[p]:
                    if h not in seen:
                        seen.add(h)
                        comp.add(h)
                        stack.append(h)
        out.append(comp)
    return out


def bf_line_graph_components(P: PointSet, e: Sequence[int], universe: str = "Y") -> list[set[Edge]]:
    if universe == "Y":
        edges = crossing_edges(P, e)
    elif universe == "Z":
        edges = z_edges(P, e)
    else:
        raise ValueError(f"universe must be 'Y' or 'Z', not {universe!r}")
    return line_graph_components(edges)


def ec3_apexes(P: PointSet, u: int, v: int) -> set[int]:
    """Exhaustive scan for apexes left of ``u -> v`` spanning empty triangles."""
    pu, pv = P[u], P[v]
    return {a for a in range(len(P)) if orient(pu, pv, P[a]) > 0 and is_ec3(P, a, u, v)}


@dataclass(frozen=True)
class EC5Verdict:
    applicable: bool
    flip_cut: bool | None


def ec5_diagonal(P: PointSet, e: Sequence[int]) -> tuple[int, ...] | None:
    """An EC5 having ``e`` as a diagonal, or ``None``."""
    u, v = require_edge(P, e)
    # every vertex of such a pentagon spans an empty triangle with uv
    sides = (sorted(ec3_apexes(P, u, v)), sorted(ec3_apexes(P, v, u)))
    for one, two in (sides, sides[::-1]):
        for a in one:
            for b1, b2 in combinations(two, 2):
                if is_ec5(P, u, v, a, b1, b2):
                    return (u, v, a, b1, b2)
    return None


def ec5_criterion(P: PointSet, e: Sequence[int]) -> EC5Verdict:
    """If ``e`` is no EC5 diagonal, it is a flip cut edge iff it is a diagonal
    of at least two EC4s."""
    if ec5_diagonal(P, e) is not None:
        return EC5Verdict(False, None)
    return EC5Verdict(True, len(z_edges(P, e)) >= 2)


# -- grids ------------------------------------------------------------------

def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def lattice_line(k: int, l: int, p, d, offset: int) -> list[tuple[int, int]]:
    """Grid points ``w`` with ``d x (w - p) == offset`` inside ``[0,k) x [0,l)``."""
    dx, dy = d
    # dx * Y - dy * X = offset
    g, s, t = _egcd(dx, -dy)
    if g != 1:
        raise GeometryError("direction is not primitive")
    X0, Y0 = t * offset, s * offset
    pts = []
    span = k + l + abs(X0) + abs(Y0)
    for m in range(-span, span + 1):
        x = p[0] + X0 + m * dx
        y = p[1] + Y0 + m * dy
        if 0 <= x < k and 0 <= y < l:
            pts.append((x, y))
    return pts


def grid_z_oracle(k: int, l: int, e: Sequence[int]) -> set[Edge]:
    """``Z`` for an edge of the row-major ``k x l`` grid, from the two lattice
    lines parallel to ``e`` at unit lattice distance."""
    i, j = e
    n = k * l
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise GeometryError(f"{tuple(e)} is not within the {k}x{l} grid")
    p = (i % k, i // k)
    q = (j % k, j // k)
    d = (q[0] - p[0], q[1] - p[1])
    if gcd(*d) != 1:
        raise GeometryError(f"{tuple(e)} passes through a grid point")
    upper = lattice_line(k, l, p, d, 1)
    lower = lattice_line(k, l, p, d, -1)
    out = set()
    for a in upper:
        for b in lower:
            if segments_cross(a, b, p, q):
                out.add(make_edge(a[1] * k + a[0], b[1] * k + b[0]))
    return out


# -- independent enumerator -------------------------------------------------

def _hull_cycle(P: PointSet) -> list[int]:
    pts = sorted(range(len(P)), key=lambda i: P[i])

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orient(P[out[-2]], P[out[-1]], P[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    corners = chain(pts)[:-1] + chain(reversed(pts))[:-1]
    cyc = []
    m = len(corners)
    for t in range(m):
        a, b = P[corners[t]], P[corners[(t + 1) % m]]
        on = [r for r in range(len(P)) if r not in (corners[t], corners[(t + 1) % m])
              and on_closed_segment(a, b, P[r])]
        on.sort(key=lambda r: (P[r][0] - a[0]) ** 2 + (P[r][1] - a[1]) ** 2)
        cyc.append(corners[t])
        cyc.extend(on)
    return cyc


def enumerate_triangle_sets(P: PointSet) -> Iterator[frozenset[tuple[int, int, int]]]:
    """Triangulations as sets of empty triangles, grown by an advancing front.

    Shares no code with the edge backtracking enumerator; used to cross-check it.
    A fully collinear set has no triangles and yields nothing.
    """
    n = len(P)
    hull = _hull_cycle(P)
    if len(hull) < 3:
        return
    empty = {}

    def ok(a, b, c):
        key = (a, b, c)
        if key not in empty:
            empty[key] = orient(P[a], P[b], P[c]) > 0 and is_ec3(P, a, b, c)
        return empty[key]

    front0 = frozenset((hull[t], hull[(t + 1) % len(hull)]) for t in range(len(hull)))

    def rec(front, covered, segs, tris):
        if not front:
            yield frozenset(tris)
            return
        p, q = min(front)
        for k in range(n):
            if k in (p, q) or not ok(p, q, k):
                continue
            new = ((q, k), (k, p))
            if any(d in covered for d in new):
                continue
            if any(segments_cross(P[x], P[y], P[s], P[t]) for x, y in new for s, t in segs):
                continue
            f2 = set(front)
            f2.discard((p, q))
            for x, y in new:
                if (x, y) in f2:
                    f2.discard((x, y))
                else:
                    f2.add((y, x))
            s2 = set(segs)
            s2.update(make_edge(x, y) for x, y in new)
            yield from rec(frozenset(f2), covered | {(p, q), *new}, s2,
                           tris + [tuple(sorted((p, q, k)))])

    yield from rec(front0, frozenset(), {make_edge(*d) for d in front0}, [])


def triangles_to_edges(tris: Iterable[tuple[int, int, int]]) -> frozenset[Edge]:
    return frozenset(make_edge(x, y) for a, b, c in tris for x, y in ((a, b), (a, c), (b, c)))


__all__ = [
    "EC5Verdict", "FlipGraph", "OracleResult", "bf_flip_graph", "bf_is_flip_cut",
    "bf_line_graph_components", "ec3_apexes", "ec5_criterion", "ec5_diagonal",
    "enumerate_triangle_sets", "grid_z_oracle", "lattice_line", "line_graph_components",
    "triangles_to_edges",
]
