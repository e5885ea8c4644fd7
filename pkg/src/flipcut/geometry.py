"""Exact integer predicates and empty-convex-polygon tests.

All decisions are taken on Python integers, which never overflow, so the
32-bit coordinate bound enforced by :class:`PointSet` is only there to keep
the vectorised numpy paths inside ``int64``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

COORD_BOUND = 2**31 - 1


class Point(NamedTuple):
    x: int
    y: int


Edge = tuple[int, int]


class GeometryError(ValueError):
    """Invalid geometric input (bad index, invalid edge, bad point set)."""


def make_edge(i: int, j: int) -> Edge:
    """Canonical ``(min, max)`` index pair."""
    if i == j:
        raise GeometryError(f"degenerate edge ({i}, {j})")
    return (i, j) if i < j else (j, i)


class PointSet:
    """Immutable ordered list of distinct integer points.

    Indices are positions in the list.  ``xy`` is an ``(n, 2)`` int64 array
    used by the vectorised angular sorts.
    """

    __slots__ = ("points", "xy", "_index")

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = []
        for p in points:
            if len(p) != 2:
                raise GeometryError(f"point must have two coordinates: {p!r}")
            x, y = p
            if int(x) != x or int(y) != y:
                raise GeometryError(f"non-integer coordinate in {p!r}")
            x, y = int(x), int(y)
            if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
                raise GeometryError(f"coordinate out of 32-bit range: {p!r}")
            pts.append(Point(x, y))
        index = {p: i for i, p in enumerate(pts)}
        if len(index) != len(pts):
            raise GeometryError("points are not pairwise distinct")
        self.points: tuple[Point, ...] = tuple(pts)
        self.xy = np.array(pts, dtype=np.int64).reshape(-1, 2)
        self._index = index

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({list(map(tuple, self.points))!r})"

    def index_of(self, p: Sequence[int]) -> int:
        return self._index[Point(*p)]

    def check_index(self, *idx: int) -> None:
        n = len(self.points)
        for i in idx:
            if not 0 <= i < n:
                raise GeometryError(f"point index {i} out of range [0, {n})")


# -- predicates -------------------------------------------------------------

def orient(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> int:
    """Sign of ``(q - p) x (r - p)``: +1 counterclockwise, 0 collinear, -1 clockwise."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def cross(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> int:
    """Twice the signed area of triangle ``pqr``."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def on_closed_segment(p, q, r) -> bool:
    """Whether ``r`` lies on the closed segment ``pq``."""
    if orient(p, q, r) != 0:
        return False
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_cross(a, b, c, d) -> bool:
    """Proper crossing: the open segments ``ab`` and ``cd`` meet in one point.

    Touching at an endpoint and collinear overlap are not crossings.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o3 != 0 and o4 != 0 and o3 != o4


def crossing_parameter(u, v, p, q) -> Fraction:
    """Parameter ``t`` of the intersection of line ``pq`` with ``u + t (v - u)``."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    ex, ey = q[0] - p[0], q[1] - p[1]
    den = dx * ey - dy * ex
    num = (p[0] - u[0]) * ey - (p[1] - u[1]) * ex
    return Fraction(num, den)


def is_edge(P: PointSet, i: int, j: int) -> bool:
    """True iff no third point of ``P`` lies on the closed segment ``P[i] P[j]``."""
    P.check_index(i, j)
    if i == j:
        raise GeometryError("edge endpoints must differ")
    p, q = P[i], P[j]
    # vectorised collinearity filter, exact on int64 for 32-bit inputs
    xy = P.xy
    if _int64_safe(P):
        c = (q[0] - p[0]) * (xy[:, 1] - p[1]) - (q[1] - p[1]) * (xy[:, 0] - p[0])
        cand = np.flatnonzero(c == 0)
    else:
        cand = range(len(P))
    for k in cand:
        k = int(k)
        if k != i and k != j and on_closed_segment(p, q, P[k]):
            return False
    return True


def _int64_safe(P: PointSet) -> bool:
    if len(P) == 0:
        return True
    span = int(P.xy.max()) - int(P.xy.min())
    return span < 2**30


def valid_edges(P: PointSet) -> list[Edge]:
    """All valid edges of ``P`` in lexicographic order."""
    n = len(P)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if is_edge(P, i, j)]


def require_edge(P: PointSet, e: Sequence[int]) -> Edge:
    i, j = e
    P.check_index(i, j)
    e = make_edge(i, j)
    if not is_edge(P, *e):
        raise GeometryError(f"{e} is not an edge: a point lies on the segment")
    return e


# -- empty convex polygons --------------------------------------------------

def convex_order(P: PointSet, vertices: Sequence[int]) -> list[int] | None:
    """Counterclockwise order of ``vertices`` if strictly convex, else ``None``."""
    pts = sorted(set(vertices), key=lambda i: P[i])
    if len(pts) != len(vertices):
        return None
    if len(pts) < 3:
        return None

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and orient(P[out[-2]], P[out[-1]], P[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) != len(pts):
        return None
    return hull


def empty_convex_polygon(P: PointSet, vertices: Sequence[int], k: int | None = None) -> bool:
    """True iff ``vertices`` are in strictly convex position with no other
    point of ``P`` inside or on the boundary of their hull."""
    if k is None:
        k = len(vertices)
    if not 3 <= k <= 5:
        raise GeometryError(f"polygon size must be 3..5, got {k}")
    if len(vertices) != k:
        raise GeometryError(f"expected {k} vertices, got {len(vertices)}")
    P.check_index(*vertices)
    hull = convex_order(P, vertices)
    if hull is None:
        return False
    pts = [P[i] for i in hull]
    m = len(pts)
    skip = set(hull)
    for idx, r in enumerate(P):
        if idx in skip:
            continue
        if all(orient(pts[t], pts[(t + 1) % m], r) >= 0 for t in range(m)):
            return False
    return True


def is_ec3(P: PointSet, a: int, b: int, c: int) -> bool:
    return empty_convex_polygon(P, (a, b, c), 3)


def is_ec4(P: PointSet, a: int, b: int, c: int, d: int) -> bool:
    return empty_convex_polygon(P, (a, b, c, d), 4)


def is_ec5(P: PointSet, a: int, b: int, c: int, d: int, f: int) -> bool:
    return empty_convex_polygon(P, (a, b, c, d, f), 5)


def crossing_edges(P: PointSet, e: Sequence[int]) -> set[Edge]:
    """All valid edges of ``P`` that properly cross ``e`` (quadratic scan)."""
    u, v = require_edge(P, e)
    pu, pv = P[u], P[v]
    n = len(P)
    # only points strictly on either side can be endpoints of a crossing edge
    above = [i for i in range(n) if orient(pu, pv, P[i]) > 0]
    below = [i for i in range(n) if orient(pu, pv, P[i]) < 0]
    out = set()
    for a in above:
        for b in below:
            if segments_cross(P[a], P[b], pu, pv) and is_edge(P, a, b):
                out.add(make_edge(a, b))
    return out


# -- exact angular sorting --------------------------------------------------

def _exact_keys(dots, crosses, d2s, idx, near_first):
    # within a half-plane (cross >= 0) the angle increases as dot/cross decreases
    out = []
    for t in idx:
        c, d = int(crosses[t]), int(dots[t])
        key = (-Fraction(d, c) if c else None)
        out.append((key, d2s[t] if near_first else -d2s[t], t))
    return out


def angular_order(
    P: PointSet,
    center: int,
    ref: int,
    members: Sequence[int],
    *,
    clockwise: bool = False,
    near_first: bool = True,
) -> list[int]:
    """Sort ``members`` by angle around ``P[center]`` measured from the ray
    towards ``P[ref]``.

    Angles are taken counterclockwise (or clockwise) in ``[0, 2*pi)``; points on
    a common ray are ordered by distance.  A float key presorts, then every
    run of nearly equal keys is re-sorted with exact rational keys, so the
    result is exact.
    """
    members = np.asarray(members, dtype=np.int64)
    if members.size == 0:
        return []
    c = P[center]
    r = P[ref]
    dtype = np.int64 if _int64_safe(P) else object
    xy = P.xy.astype(dtype)
    rx, ry = r[0] - c[0], r[1] - c[1]
    wx = xy[members, 0] - c[0]
    wy = xy[members, 1] - c[1]
    dots = rx * wx + ry * wy
    crs = rx * wy - ry * wx
    if clockwise:
        crs = -crs
    # lower half (angle in [pi, 2pi)) is mapped by negation onto [0, pi)
    lower = (crs < 0) | ((crs == 0) & (dots < 0))
    half = lower.astype(np.int64)
    dots = np.where(lower, -dots, dots)
    crs = np.where(lower, -crs, crs)
    d2 = wx * wx + wy * wy
    fd = dots.astype(np.float64)
    fc = crs.astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        fkey = np.where(fc == 0, -np.inf, -fd / np.where(fc == 0, 1.0, fc))
    fd2 = d2.astype(np.float64) * (1.0 if near_first else -1.0)
    order = np.lexsort((fd2, fkey, half))
    fkey_s = fkey[order]
    half_s = half[order]
    n = len(order)
    # runs of keys that floats cannot separate reliably
    close = np.zeros(max(n - 1, 0), dtype=bool)
    if n > 1:
        a, b = fkey_s[:-1], fkey_s[1:]
        same_half = half_s[:-1] == half_s[1:]
        both_inf = np.isinf(a) & np.isinf(b)
        scale = np.maximum(np.abs(a), np.abs(b))
        with np.errstate(invalid="ignore"):
            near = np.abs(a - b) <= 1e-12 * scale
        close = same_half & (both_inf | near)
    out = order.tolist()
    if close.any():
        d2_list = d2.tolist()
        t = 0
        while t < n - 1:
            if not close[t]:
                t += 1
                continue
            s = t
            while t < n - 1 and close[t]:
                t += 1
            run = out[s:t + 1]
            keys = _exact_keys(dots, crs, d2_list, run, near_first)
            keys.sort(key=lambda k: (k[0] is not None, k[0] if k[0] is not None else 0, k[1]))
            out[s:t + 1] = [k[2] for k in keys]
            t += 1
    return members[np.asarray(out, dtype=np.int64)].tolist()
