"""Flip cut edge detection.

For a query edge ``e = uv`` the apexes ``A`` (left of ``u -> v``) and ``B``
(right) that span empty triangles with ``e`` are found by a two-order scan,
and the connected components of the line graph of ``Z`` (edges ``ab`` with
``a in A``, ``b in B`` crossing ``e``) are found by a linear two-pointer sweep.
``e`` is a flip cut edge iff there are at least two components, and the
components are in bijection with those of the flip graph with ``e`` forbidden.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .geometry import (
    Edge,
    PointSet,
    _int64_safe,
    angular_order,
    crossing_edges,
    cross,
    empty_convex_polygon,
    make_edge,
    orient,
    require_edge,
    valid_edges,
)
from .triangulation import Triangulation, TriangulationError, corridor

LEFT, CROSS, RIGHT = -1, 0, 1


@dataclass(frozen=True)
class ApexOrders:
    """Apexes of empty triangles on each side of the directed edge ``u -> v``.

    ``A`` lies to the left, ordered by decreasing angle at ``u``; ``B`` lies
    to the right, ordered by decreasing angle at ``v``.
    """

    u: int
    v: int
    A: tuple[int, ...]
    B: tuple[int, ...]


@dataclass(frozen=True)
class ZComponents:
    """Components ``(A_i, B_i)`` of the line graph of ``Z``, in discovery order."""

    components: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    _owner: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for c, (As, Bs) in enumerate(self.components):
            for p in As + Bs:
                self._owner[p] = c

    @property
    def count(self) -> int:
        return len(self.components)

    def component_of(self, f: Sequence[int]) -> int:
        """Index of the component holding the ``Z`` edge ``f``."""
        a, b = f
        ca, cb = self._owner.get(a), self._owner.get(b)
        if ca is None or ca != cb:
            raise KeyError(f"{tuple(f)} is not an edge of Z")
        return ca


@dataclass(frozen=True)
class EdgeReport:
    edge: Edge
    flip_cut: bool
    component_count: int
    components: ZComponents

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "flip_cut": self.flip_cut,
            "component_count": self.component_count,
            "components": [{"A": list(a), "B": list(b)} for a, b in self.components.components],
        }


def z_edges(P: PointSet, e: Sequence[int]) -> set[Edge]:
    """Brute-force ``Z``: crossing edges ``f`` whose quadrilateral with ``e`` is an EC4."""
    u, v = require_edge(P, e)
    return {f for f in crossing_edges(P, (u, v)) if empty_convex_polygon(P, (u, v) + f, 4)}


# -- apex orders ------------------------------------------------------------

def _left_of(P: PointSet, u: int, v: int) -> np.ndarray:
    pu, pv = P[u], P[v]
    dx, dy = pv[0] - pu[0], pv[1] - pu[1]
    if _int64_safe(P):
        xy = P.xy
        c = dx * (xy[:, 1] - pu[1]) - dy * (xy[:, 0] - pu[0])
        return np.flatnonzero(c > 0)
    return np.array([i for i, p in enumerate(P) if orient(pu, pv, p) > 0], dtype=np.int64)


def _scan(walk: Sequence[int], guard: Sequence[int]) -> list[int]:
    # walk the v-order; keep a point iff it comes after every kept point in the u-order
    if not len(walk):
        return []
    walk = np.asarray(walk, dtype=np.int64)
    guard = np.asarray(guard, dtype=np.int64)
    pos = np.empty(int(walk.max()) + 1, dtype=np.int64)
    pos[guard] = np.arange(len(guard))
    seq = pos[walk]
    prev_max = np.maximum.accumulate(np.concatenate(([-1], seq[:-1])))
    return walk[seq > prev_max].tolist()


def apex_chain(P: PointSet, u: int, v: int) -> list[int]:
    """Apexes ``a`` left of ``u -> v`` with ``auv`` empty, by decreasing angle at ``u``."""
    left = _left_of(P, u, v)
    if left.size == 0:
        return []
    # u-order: decreasing angle at u, farther first on a common ray
    guard = angular_order(P, u, v, left)[::-1]
    # v-order: increasing angle at v, nearer first on a common ray
    walk = angular_order(P, v, u, left, clockwise=True)
    return _scan(walk, guard)


def apex_orders(P: PointSet, e: Sequence[int]) -> ApexOrders:
    u, v = e
    require_edge(P, e)
    return ApexOrders(u, v, tuple(apex_chain(P, u, v)), tuple(apex_chain(P, v, u)))


# -- components of G_Z ------------------------------------------------------

def crossing_side(P: PointSet, u: int, v: int, a: int, b: int) -> int:
    """Where segment ``ab`` (``a`` left, ``b`` right of ``u -> v``) meets line ``uv``.

    ``LEFT`` at or beyond ``u``, ``RIGHT`` at or beyond ``v``, else ``CROSS``.
    """
    pa, pb = P[a], P[b]
    if orient(pa, pb, P[u]) >= 0:
        return LEFT
    if orient(pa, pb, P[v]) <= 0:
        return RIGHT
    return CROSS


def _components(P: PointSet, u: int, v: int, A: Sequence[int], B: Sequence[int]) -> ZComponents:
    k, l = len(A), len(B)
    comps = []
    done_a = [False] * k
    done_b = [False] * l
    i = j = 0

    def crosses(i, j):
        return crossing_side(P, u, v, A[i], B[j]) == CROSS

    while i < k and j < l:
        # phase 1: first edge of the next component
        halt = False
        while True:
            s = crossing_side(P, u, v, A[i], B[j])
            if s == CROSS:
                break
            if s == RIGHT:
                j += 1
                if j >= l:
                    halt = True
                    break
            else:
                i += 1
                if i >= k:
                    halt = True
                    break
        if halt:
            break
        As, Bs = [A[i]], [B[j]]
        # phase 2: pivot alternately on a_i and b_j
        while True:
            while j < l and crosses(i, j):
                if Bs[-1] != B[j]:
                    Bs.append(B[j])
                j += 1
            j -= 1
            done_a[i] = True
            while i < k and crosses(i, j):
                if As[-1] != A[i]:
                    As.append(A[i])
                i += 1
            i -= 1
            done_b[j] = True
            if done_a[i] and done_b[j]:
                break
        comps.append((tuple(As), tuple(Bs)))
        i += 1
        j += 1
    return ZComponents(tuple(comps))


def z_components(ap: ApexOrders, P: PointSet) -> ZComponents:
    """Connected components of ``G_Z`` from the ordered apex lists."""
    if not ap.A or not ap.B:
        return ZComponents(())
    return _components(P, ap.u, ap.v, ap.A, ap.B)


def analyze_edge(P: PointSet, e: Sequence[int]) -> EdgeReport:
    ap = apex_orders(P, e)
    zc = z_components(ap, P)
    return EdgeReport(make_edge(*e), zc.count >= 2, zc.count, zc)


def is_flip_cut_edge(P: PointSet, e: Sequence[int]) -> tuple[bool, int]:
    """``(flip_cut, c)`` where ``c`` counts the components with ``e`` forbidden.

    ``c == 0`` means every triangulation contains ``e``.
    """
    r = analyze_edge(P, e)
    return r.flip_cut, r.component_count


# -- all edges --------------------------------------------------------------

def ray_groups(P: PointSet, p: int) -> list[tuple[int, ...]]:
    """Points around ``p`` in counterclockwise order, grouped by ray, nearest first."""
    others = [q for q in range(len(P)) if q != p]
    if not others:
        return []
    order = angular_order(P, p, others[0], others)
    c = P[p]
    groups: list[list[int]] = []
    for q in order:
        if groups:
            r = P[groups[-1][0]]
            pq = P[q]
            same_ray = (orient(c, r, pq) == 0
                        and (r[0] - c[0]) * (pq[0] - c[0]) + (r[1] - c[1]) * (pq[1] - c[1]) > 0)
            if same_ray:
                groups[-1].append(q)
                continue
        groups.append([q])
    return [tuple(g) for g in groups]


def _left_arc(P: PointSet, groups, u: int, v: int):
    pu, pv = P[u], P[v]
    left = [orient(pu, pv, P[g[0]]) > 0 for g in groups]
    m = len(groups)
    for s in range(m):
        if left[s] and not left[s - 1]:
            out = []
            t = s
            while left[t % m] and len(out) < m:
                out.append(groups[t % m])
                t += 1
            return out
    return []


def _chain_from_groups(P, groups, u, v) -> list[int]:
    guard = [q for g in reversed(_left_arc(P, groups[u], u, v)) for q in reversed(g)]
    walk = [q for g in reversed(_left_arc(P, groups[v], u, v)) for q in g]
    return _scan(walk, guard)


def _edge_is_cut(P, groups, e) -> bool:
    u, v = e
    A = _chain_from_groups(P, groups, u, v)
    B = _chain_from_groups(P, groups, v, u)
    if not A or not B:
        return False
    return _components(P, u, v, A, B).count >= 2


def _scan_chunk(args):
    P, groups, edges = args
    return [e for e in edges if _edge_is_cut(P, groups, e)]


def all_flip_cut_edges(P: PointSet, parallel: bool = False, workers: int | None = None) -> set[Edge]:
    """Every flip cut edge of ``P``.

    The cyclic order around each point is sorted once; each edge test then
    splits the two relevant orders and runs the linear sweep.
    """
    groups = [ray_groups(P, p) for p in range(len(P))]
    edges = valid_edges(P)
    if not parallel or len(edges) < 64:
        return set(_scan_chunk((P, groups, edges)))
    chunks = [edges[t::8] for t in range(8)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        found = ex.map(_scan_chunk, [(P, groups, c) for c in chunks])
    return {e for part in found for e in part}


# -- same component ---------------------------------------------------------

def representative_z_edge(T: Triangulation, e: Sequence[int]) -> Edge:
    """A ``Z`` edge in the same ``G_Y`` component as the edges of ``T`` crossing ``e``.

    Its endpoints are the corridor vertices closest to the line through ``e``
    on either side, smallest index on ties.
    """
    P = T.points
    u, v = e
    pu, pv = P[u], P[v]
    verts = {x for t in corridor(T, (u, v)) for x in t}
    above = [(cross(pu, pv, P[x]), x) for x in verts if cross(pu, pv, P[x]) > 0]
    below = [(-cross(pu, pv, P[x]), x) for x in verts if cross(pu, pv, P[x]) < 0]
    a = min(above)[1]
    b = min(below)[1]
    return make_edge(a, b)


def component_label(P: PointSet, e: Sequence[int], T: Triangulation, zc: ZComponents) -> int:
    return zc.component_of(representative_z_edge(T, e))


def same_component(P: PointSet, e: Sequence[int], T1: Triangulation, T2: Triangulation,
                   zc: ZComponents | None = None) -> bool:
    """Whether ``T1`` and ``T2`` are connected by flips that never create ``e``."""
    e = tuple(e)
    for T in (T1, T2):
        if make_edge(*e) in T:
            raise TriangulationError(f"triangulation contains the forbidden edge {make_edge(*e)}")
    if zc is None:
        zc = z_components(apex_orders(P, e), P)
    if T1 == T2:
        return True
    return component_label(P, e, T1, zc) == component_label(P, e, T2, zc)


__all__ = [
    "ApexOrders", "EdgeReport", "ZComponents", "all_flip_cut_edges", "analyze_edge",
    "apex_chain", "apex_orders", "component_label", "crossing_side", "is_flip_cut_edge",
    "ray_groups", "representative_z_edge", "same_component", "z_components", "z_edges",
]
