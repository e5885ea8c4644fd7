"""Integer point sets for the named families, each checked against its
defining property before it is returned."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import GeometryError, PointSet, empty_convex_polygon, is_edge, orient


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Family:
    """A generated point set plus named index maps (e.g. ``t``, ``b``, ``u``)."""

    points: PointSet
    names: dict = field(default_factory=dict)

    def comment_lines(self) -> list[str]:
        out = []
        for key, val in self.names.items():
            if isinstance(val, (list, tuple)):
                out.append(f"{key}: " + " ".join(map(str, val)))
            else:
                out.append(f"{key}: {val}")
        return out


def gen_grid(k: int, l: int) -> PointSet:
    """All ``(x, y)`` with ``0 <= x < k``, ``0 <= y < l``; index ``y * k + x``."""
    if k < 2 or l < 2:
        raise GeometryError("grid sides must be at least 2")
    return PointSet((x, y) for y in range(l) for x in range(k))


def gen_convex(n: int) -> PointSet:
    """Points ``(i, i^2)``: strictly convex, cyclic order equals index order."""
    if n < 3:
        raise GeometryError("need at least 3 points")
    return PointSet((i, i * i) for i in range(n))


def _chain_reflex(P: PointSet, chain, inward: int) -> bool:
    # consecutive triples turn towards the other chain
    return all(orient(P[a], P[b], P[c]) == inward for a, b, c in zip(chain, chain[1:], chain[2:]))


def gen_channel(n: int, H: int | None = None, check_ec5: bool | None = None) -> Family:
    """Two opposing reflex chains ``t_1..t_n`` (indices ``0..n-1``) and
    ``b_1..b_n`` (indices ``n..2n-1``) on parabolic arcs.

    The offset ``H`` defaults to ``n^2`` so the arcs stay shallow next to the gap;
    with a narrow gap the end points hide each other and the long ``b_i t_j``
    become unavoidable.
    """
    if n < 3:
        raise GeometryError("channel needs n >= 3")
    if H is None:
        H = n * n
    tops = [(4 * i, (2 * i - n - 1) ** 2 + H) for i in range(1, n + 1)]
    bots = [(4 * i, -((2 * i - n - 1) ** 2) - H) for i in range(1, n + 1)]
    P = PointSet(tops + bots)
    t = list(range(n))
    b = list(range(n, 2 * n))
    if not (_chain_reflex(P, t, 1) and _chain_reflex(P, b, -1)):
        raise GenerationError("channel chains are not reflex")
    if not all(is_edge(P, bi, tj) for bi in b for tj in t):
        raise GenerationError("some b_i t_j is not an edge")
    for i in range(1, n - 1):
        for j in range(1, n - 1):
            for bi, tj in ((b[i - 1], t[j + 1]), (b[i + 1], t[j - 1])):
                if not empty_convex_polygon(P, (b[i], t[j], bi, tj), 4):
                    raise GenerationError(f"b_{i + 1} t_{j + 1} lacks its two EC4s")
    if check_ec5 is None:
        check_ec5 = n <= 6
    if check_ec5:
        from .oracle import ec5_diagonal

        for bi in b:
            for tj in t:
                if ec5_diagonal(P, (bi, tj)) is not None:
                    raise GenerationError(f"EC5 with diagonal b t ({bi}, {tj})")
    return Family(P, {"t": t, "b": b})


def gen_hourglass(n: int, R: int = 10**6, retries: int = 8) -> Family:
    """``a_1..a_n`` on the upper half circle, ``b_i = -a_i``, and ``u, v``
    close to the centre; forbidding ``uv`` leaves ``n`` flip components.

    Indices: ``a`` is ``0..n-1``, ``b`` is ``n..2n-1``, ``u = 2n``, ``v = 2n+1``.
    """
    from .core import z_edges
    from .geometry import make_edge

    if n < 2:
        raise GeometryError("hourglass needs n >= 2")
    for _ in range(retries):
        a = []
        for i in range(1, n + 1):
            th = math.pi * i / (n + 1)
            a.append((round(R * math.cos(th)), round(R * math.sin(th))))
        pts = a + [(-x, -y) for x, y in a] + [(-1, 0), (1, 0)]
        try:
            P = PointSet(pts)
        except GeometryError:
            R *= 2
            continue
        u, v = 2 * n, 2 * n + 1
        want = {make_edge(i, n + i) for i in range(n)}
        if z_edges(P, (u, v)) == want:
            return Family(P, {"a": list(range(n)), "b": list(range(n, 2 * n)), "u": u, "v": v})
        R *= 2
    raise GenerationError(f"hourglass({n}) failed validation after {retries} attempts")


def gen_random(n: int, coord_bound: int, seed: int, allow_collinear: bool = True,
               max_tries: int = 10_000) -> PointSet:
    """``n`` distinct points uniform in ``[0, coord_bound]^2``."""
    if n < 3:
        raise GeometryError("need at least 3 points")
    if coord_bound < n:
        raise GeometryError("coord_bound must be at least n")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        pts: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        while len(pts) < n:
            need = n - len(pts)
            cand = rng.integers(0, coord_bound + 1, size=(2 * need + 8, 2))
            for x, y in cand.tolist():
                if (x, y) not in seen:
                    seen.add((x, y))
                    pts.append((x, y))
                    if len(pts) == n:
                        break
        P = PointSet(pts)
        if allow_collinear or not _has_collinear_triple(P):
            return P
    raise GenerationError("resampling budget exhausted")


def _has_collinear_triple(P: PointSet) -> bool:
    n = len(P)
    for i in range(n):
        seen = set()
        for j in range(n):
            if j == i:
                continue
            dx, dy = P[j][0] - P[i][0], P[j][1] - P[i][1]
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                return True
            seen.add((dx, dy))
    return False


__all__ = ["Family", "GenerationError", "gen_channel", "gen_convex", "gen_grid",
           "gen_hourglass", "gen_random"]
