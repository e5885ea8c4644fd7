"""Triangulations as canonical edge sets: validation, flips, constrained
completion, corridors along a segment, and exhaustive enumeration."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .geometry import (
    Edge,
    GeometryError,
    PointSet,
    crossing_parameter,
    make_edge,
    on_closed_segment,
    orient,
    require_edge,
    segments_cross,
    valid_edges,
)

DEFAULT_ENUM_BOUND = 12

Triangle = tuple[int, int, int]


class TriangulationError(ValueError):
    pass


class CrossingPair(TriangulationError):
    def __init__(self, f: Edge, g: Edge):
        super().__init__(f"edges {f} and {g} cross")
        self.f, self.g = f, g


class NotMaximal(TriangulationError):
    def __init__(self, witness: Edge):
        super().__init__(f"edge set is not maximal: {witness} can be added")
        self.witness = witness


class IllegalFlip(TriangulationError):
    pass


class SizeBoundExceeded(TriangulationError):
    pass


@dataclass(frozen=True)
class FlipMove:
    removed: Edge
    added: Edge

    def reversed(self) -> "FlipMove":
        return FlipMove(self.added, self.removed)


class Triangulation:
    """A triangulation of a fixed point set, stored as a sorted edge tuple.

    Construct through :func:`validate` (checked) or directly when the edge set
    is known to be a triangulation.  Triangles are derived lazily.
    """

    __slots__ = ("points", "edges", "_edge_set", "_triangles", "_edge_tris", "_hash")

    def __init__(self, points: PointSet, edges: Iterable[Sequence[int]]):
        es = frozenset(make_edge(*e) for e in edges)
        self.points = points
        self._edge_set = es
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        self._triangles = None
        self._edge_tris = None
        self._hash = hash(self.edges)

    def __contains__(self, e) -> bool:
        return make_edge(*e) in self._edge_set

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Triangulation)
                and self._edge_set == other._edge_set
                and self.points == other.points)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Triangulation({list(self.edges)!r})"

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        if self._triangles is None:
            self._triangles = _derive_triangles(self.points, self._edge_set)
        return self._triangles

    def triangles_at(self, e: Edge) -> list[Triangle]:
        if self._edge_tris is None:
            m: dict[Edge, list[Triangle]] = {}
            for t in self.triangles:
                a, b, c = t
                for f in ((a, b), (a, c), (b, c)):
                    m.setdefault(f, []).append(t)
            self._edge_tris = m
        return self._edge_tris.get(make_edge(*e), [])

    def with_flip(self, removed: Edge, added: Edge) -> "Triangulation":
        return Triangulation(self.points, (self._edge_set - {removed}) | {added})


def _derive_triangles(P: PointSet, edges: frozenset[Edge]) -> tuple[Triangle, ...]:
    adj: dict[int, set[int]] = {}
    for i, j in edges:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    tris = []
    for i, j in sorted(edges):
        for k in adj[i] & adj[j]:
            if k <= j:
                continue
            a, b, c = P[i], P[j], P[k]
            o = orient(a, b, c)
            if o == 0:
                continue
            # faces are the 3-cycles with no point strictly inside
            if not any(
                orient(a, b, r) == o and orient(b, c, r) == o and orient(c, a, r) == o
                for r in P
            ):
                tris.append((i, j, k))
    return tuple(tris)


def hull_boundary_count(P: PointSet) -> int:
    """Number of points on the convex hull boundary, collinear ones included."""
    pts = sorted(range(len(P)), key=lambda i: P[i])

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orient(P[out[-2]], P[out[-1]], P[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    hull = chain(pts)[:-1] + chain(reversed(pts))[:-1]
    m = len(hull)
    return sum(
        1 for r in P
        if any(on_closed_segment(P[hull[t]], P[hull[(t + 1) % m]], r) for t in range(m))
    )


def _all_collinear(P: PointSet) -> bool:
    return all(orient(P[0], P[1], r) == 0 for r in P)


def expected_edge_count(P: PointSet) -> int:
    n = len(P)
    if n < 3 or _all_collinear(P):
        return max(n - 1, 0)
    return 3 * n - 3 - hull_boundary_count(P)


def _first_crossing(P: PointSet, edges: Sequence[Edge]):
    for a in range(len(edges)):
        i, j = edges[a]
        for b in range(a + 1, len(edges)):
            k, l = edges[b]
            if segments_cross(P[i], P[j], P[k], P[l]):
                return edges[a], edges[b]
    return None


def validate(P: PointSet, E: Iterable[Sequence[int]]) -> Triangulation:
    """Check that ``E`` is a maximal non-crossing set of edges of ``P``."""
    es = sorted({require_edge(P, e) for e in E})
    bad = _first_crossing(P, es)
    if bad:
        raise CrossingPair(*bad)
    # every triangulation has the same edge count, so a non-crossing set of
    # that size is maximal
    if len(es) != expected_edge_count(P):
        have = set(es)
        for g in valid_edges(P):
            if g in have:
                continue
            if not any(segments_cross(P[g[0]], P[g[1]], P[i], P[j]) for i, j in es):
                raise NotMaximal(g)
        raise TriangulationError("edge count does not match the point set")  # pragma: no cover
    return Triangulation(P, es)


def flippable(T: Triangulation, f: Sequence[int]) -> Edge | None:
    """The opposite diagonal of ``f`` if ``f`` is flippable in ``T``, else ``None``."""
    f = make_edge(*f)
    if f not in T:
        raise TriangulationError(f"{f} is not an edge of the triangulation")
    tris = T.triangles_at(f)
    if len(tris) != 2:
        return None
    c = next(x for x in tris[0] if x not in f)
    d = next(x for x in tris[1] if x not in f)
    P = T.points
    # the two faces are empty, so the quadrilateral is an EC4 iff it is strictly convex
    if segments_cross(P[c], P[d], P[f[0]], P[f[1]]):
        return make_edge(c, d)
    return None


def apply_flip(T: Triangulation, m: FlipMove) -> Triangulation:
    removed = make_edge(*m.removed)
    added = make_edge(*m.added)
    if removed not in T:
        raise IllegalFlip(f"{removed} is not in the triangulation")
    if flippable(T, removed) != added:
        raise IllegalFlip(f"{removed} does not flip to {added}")
    return T.with_flip(removed, added)


def flips(T: Triangulation) -> Iterator[FlipMove]:
    """All legal flips of ``T``."""
    for f in T.edges:
        g = flippable(T, f)
        if g is not None:
            yield FlipMove(f, g)


def constrained_triangulation(P: PointSet, F: Iterable[Sequence[int]] = ()) -> Triangulation:
    """Greedy completion of the non-crossing edge set ``F`` to a triangulation.

    Candidate edges are inserted in order of (squared length, index pair).
    """
    fs = sorted({require_edge(P, e) for e in F})
    bad = _first_crossing(P, fs)
    if bad:
        raise CrossingPair(*bad)

    def key(e):
        (x1, y1), (x2, y2) = P[e[0]], P[e[1]]
        return ((x1 - x2) ** 2 + (y1 - y2) ** 2, e)

    chosen = list(fs)
    have = set(fs)
    for g in sorted(valid_edges(P), key=key):
        if g in have:
            continue
        a, b = P[g[0]], P[g[1]]
        if not any(segments_cross(a, b, P[i], P[j]) for i, j in chosen):
            chosen.append(g)
            have.add(g)
    return Triangulation(P, chosen)


def corridor(T: Triangulation, e: Sequence[int]) -> list[Triangle]:
    """Triangles of ``T`` crossed by segment ``e``, ordered from ``e[0]`` to ``e[1]``."""
    P = T.points
    u, v = e
    require_edge(P, e)
    if make_edge(u, v) in T:
        raise TriangulationError(f"{make_edge(u, v)} is in the triangulation")
    pu, pv = P[u], P[v]
    params: dict[Edge, object] = {}
    for f in T.edges:
        if segments_cross(pu, pv, P[f[0]], P[f[1]]):
            params[f] = crossing_parameter(pu, pv, P[f[0]], P[f[1]])
    keyed = []
    for t in T.triangles:
        a, b, c = t
        ts = [params[f] for f in ((a, b), (a, c), (b, c)) if f in params]
        if ts:
            keyed.append(((min(ts), max(ts)), t))
    keyed.sort()
    return [t for _, t in keyed]


def corridor_edges(T: Triangulation, e: Sequence[int]) -> list[Edge]:
    """The edges of ``T`` crossing ``e`` (``Y`` restricted to ``T``), in order along ``e``."""
    P = T.points
    pu, pv = P[e[0]], P[e[1]]
    hits = [
        (crossing_parameter(pu, pv, P[f[0]], P[f[1]]), f)
        for f in T.edges
        if segments_cross(pu, pv, P[f[0]], P[f[1]])
    ]
    hits.sort()
    return [f for _, f in hits]


# -- enumeration ------------------------------------------------------------

def enum_bound() -> int:
    return int(os.environ.get("FLIPCUT_ENUM_BOUND", DEFAULT_ENUM_BOUND))


def iter_triangulations(P: PointSet, bound: int | None = None) -> Iterator[Triangulation]:
    """Yield every triangulation of ``P`` exactly once.

    Backtracks over the valid edges in lexicographic order: the first
    undecided edge that no chosen edge crosses is either taken or skipped, and
    a skipped edge must end up crossed by a chosen one.
    """
    if bound is None:
        bound = enum_bound()
    if len(P) > bound:
        raise SizeBoundExceeded(f"{len(P)} points exceed the enumeration bound {bound}")
    edges = valid_edges(P)
    m = len(edges)
    crosses = [0] * m
    for a in range(m):
        i, j = edges[a]
        for b in range(a + 1, m):
            k, l = edges[b]
            if segments_cross(P[i], P[j], P[k], P[l]):
                crosses[a] |= 1 << b
                crosses[b] |= 1 << a
    full = (1 << m) - 1

    def rec(chosen: int, blocked: int, skipped: int):
        free = full & ~(chosen | blocked | skipped)
        if not free:
            if skipped & ~blocked == 0:
                yield chosen
            return
        # skipped edges that can no longer be crossed by any future choice
        pending = skipped & ~blocked
        open_ = full & ~(chosen | blocked | skipped)
        t = pending
        while t:
            low = t & -t
            idx = low.bit_length() - 1
            if not crosses[idx] & open_:
                return
            t ^= low
        low = free & -free
        idx = low.bit_length() - 1
        yield from rec(chosen | low, blocked | crosses[idx], skipped)
        if crosses[idx] & open_ & ~low:
            yield from rec(chosen, blocked, skipped | low)

    for mask in rec(0, 0, 0):
        yield Triangulation(P, [edges[k] for k in range(m) if mask >> k & 1])


def enumerate_triangulations(P: PointSet, bound: int | None = None,
                             callback: Callable[[Triangulation], None] | None = None):
    """All triangulations of ``P`` as a list, or streamed to ``callback``."""
    if callback is None:
        return list(iter_triangulations(P, bound))
    for T in iter_triangulations(P, bound):
        callback(T)
    return None


__all__ = [
    "CrossingPair", "FlipMove", "GeometryError", "IllegalFlip", "NotMaximal",
    "SizeBoundExceeded", "Triangulation", "TriangulationError", "apply_flip",
    "constrained_triangulation", "corridor", "corridor_edges",
    "enumerate_triangulations", "expected_edge_count", "flippable", "flips",
    "hull_boundary_count", "iter_triangulations", "validate",
]
