"""Forbidden chords in convex position.

Polygons are handled combinatorially: a polygon is a list of vertex labels
in cyclic order and a triangulation is its frozenset of chords.  The public
functions realise results on ``gen_convex(n)`` so they interoperate with
:mod:`flipcut.triangulation`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .generators import gen_convex
from .geometry import Edge, make_edge
from .triangulation import FlipMove, Triangulation, apply_flip

Chords = frozenset[Edge]


class ConvexError(ValueError):
    pass


@dataclass(frozen=True)
class ConvexChordSystem:
    """Convex ``n``-gon with vertices ``0..n-1`` in cyclic order and forbidden chords ``X``."""

    n: int
    forbidden: Chords = frozenset()

    def __post_init__(self):
        if self.n < 3:
            raise ConvexError("a polygon needs at least 3 vertices")
        X = frozenset(make_edge(*c) for c in self.forbidden)
        for c in X:
            if not is_chord(self.n, c):
                raise ConvexError(f"{c} is not a chord of the {self.n}-gon")
        object.__setattr__(self, "forbidden", X)

    def chords(self) -> list[Edge]:
        return all_chords(list(range(self.n)))

    def degree(self, p: int) -> int:
        return sum(p in c for c in self.forbidden)


@dataclass
class FlipPath:
    start: Triangulation
    moves: list[FlipMove] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.moves)

    def triangulations(self):
        """Replay the moves with geometric legality checks."""
        T = self.start
        yield T
        for m in self.moves:
            T = apply_flip(T, m)
            yield T

    @property
    def end(self) -> Triangulation:
        T = self.start
        for T in self.triangulations():
            pass
        return T

    def to_json(self) -> dict:
        return {
            "start": [list(e) for e in self.start.edges],
            "moves": [{"remove": list(m.removed), "add": list(m.added)} for m in self.moves],
        }


def is_chord(n: int, c: Sequence[int]) -> bool:
    i, j = c
    return 0 <= i < n and 0 <= j < n and i != j and (j - i) % n not in (1, n - 1)


# -- polygon combinatorics on label lists -----------------------------------

def _pos(verts: Sequence[int]) -> dict[int, int]:
    return {p: t for t, p in enumerate(verts)}


def _is_side(verts, c) -> bool:
    pos = _pos(verts)
    d = (pos[c[0]] - pos[c[1]]) % len(verts)
    return d in (1, len(verts) - 1)


def all_chords(verts: Sequence[int]) -> list[Edge]:
    m = len(verts)
    return sorted(make_edge(verts[a], verts[b])
                  for a in range(m) for b in range(a + 2, m) if not (a == 0 and b == m - 1))


def chords_cross(verts: Sequence[int], c1: Edge, c2: Edge) -> bool:
    pos = _pos(verts)
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    x, y = pos[c2[0]], pos[c2[1]]
    if len({a, b, x, y}) < 4:
        return False
    return (a < x < b) != (a < y < b)


def _neighbors(verts, chords) -> dict[int, set[int]]:
    m = len(verts)
    nb = {p: set() for p in verts}
    for t in range(m):
        a, b = verts[t], verts[(t + 1) % m]
        nb[a].add(b)
        nb[b].add(a)
    for i, j in chords:
        nb[i].add(j)
        nb[j].add(i)
    return nb


def flip_partner(verts: Sequence[int], chords: Chords, c: Edge) -> Edge:
    """The other diagonal of the quadrilateral formed by the two triangles at chord ``c``."""
    pos = _pos(verts)
    m = len(verts)
    nb = _neighbors(verts, chords)
    i, j = c
    lo, hi = sorted((pos[i], pos[j]))
    inner = [k for k in nb[i] & nb[j] if lo < pos[k] < hi]
    outer = [k for k in nb[i] & nb[j] if not lo <= pos[k] <= hi]
    if len(inner) != 1 or len(outer) != 1:
        raise ConvexError(f"{c} is not a chord of this triangulation")
    return make_edge(inner[0], outer[0])


def star(verts: Sequence[int], p: int) -> Chords:
    m = len(verts)
    t = verts.index(p)
    return frozenset(make_edge(p, verts[(t + s) % m]) for s in range(2, m - 1))


def ears(verts: Sequence[int], chords: Chords) -> list[tuple[int, Edge]]:
    """``(cut-off vertex, ear chord)`` pairs in cyclic order."""
    m = len(verts)
    out = []
    for t in range(m):
        e = make_edge(verts[t - 1], verts[(t + 1) % m])
        if e in chords:
            out.append((verts[t], e))
    return out


def _restrict(verts, X) -> Chords:
    vs = set(verts)
    return frozenset(c for c in X if c[0] in vs and c[1] in vs and not _is_side(verts, c))


def _without(verts, q):
    return [p for p in verts if p != q]


# -- star flips ---------------------------------------------------------------

def _star_moves(verts, chords: Chords, p: int, X: Chords) -> tuple[list[FlipMove], Chords]:
    moves = []
    m = len(verts)
    pos = _pos(verts)
    while True:
        nb = sorted(_neighbors(verts, chords)[p], key=lambda q: (pos[q] - pos[p]) % m)
        step = None
        for q, r in zip(nb, nb[1:]):
            if (pos[r] - pos[q]) % m != 1:
                step = make_edge(q, r)
                break
        if step is None:
            return moves, chords
        s = flip_partner(verts, chords, step)
        if p not in s or s in X:  # pragma: no cover - excluded by the precondition
            raise ConvexError("star flip would use a forbidden chord")
        moves.append(FlipMove(step, s))
        chords = (chords - {step}) | {s}


def _reverse(moves: list[FlipMove]) -> list[FlipMove]:
    return [mv.reversed() for mv in reversed(moves)]


# -- realisation ------------------------------------------------------------

def realize(n: int, chords: Iterable[Sequence[int]]) -> Triangulation:
    """Triangulation of ``gen_convex(n)`` with the given chords plus the hull sides."""
    sides = [make_edge(t, (t + 1) % n) for t in range(n)]
    return Triangulation(gen_convex(n), list(sides) + [make_edge(*c) for c in chords])


def chords_of(T) -> Chords:
    """Chords of a realised triangulation (or pass a chord set through)."""
    if isinstance(T, Triangulation):
        n = len(T.points)
        return frozenset(c for c in T.edges if is_chord(n, c))
    return frozenset(make_edge(*c) for c in T)


def _check_triangulation(n: int, chords: Chords) -> None:
    verts = list(range(n))
    if len(chords) != n - 3 or any(not is_chord(n, c) for c in chords):
        raise ConvexError("not a triangulation of the convex polygon")
    cs = sorted(chords)
    for a in range(len(cs)):
        for b in range(a + 1, len(cs)):
            if chords_cross(verts, cs[a], cs[b]):
                raise ConvexError(f"chords {cs[a]} and {cs[b]} cross")


def _forbidden(n: int, X) -> Chords:
    return ConvexChordSystem(n, frozenset(make_edge(*c) for c in X)).forbidden


# -- public operations --------------------------------------------------------

def zigzag_cut_set(n: int) -> tuple[Triangulation, Chords, Triangulation]:
    """Zigzag triangulation ``T``, the set ``X`` of its ``n - 3`` flip partners,
    and the opposite zigzag ``T2``.

    Forbidding ``X`` freezes ``T``; ``T2`` avoids ``X``, so ``X`` is a flip cut
    set whenever ``T2`` exists.
    """
    if n < 5:
        raise ConvexError("zigzag cut set needs n >= 5")
    verts = list(range(n))

    # path p0, p_{n-2}, p1, p_{n-3}, ...
    seq = [0]
    lo, hi = 1, n - 2
    while lo <= hi:
        seq.append(hi)
        hi -= 1
        if lo <= hi:
            seq.append(lo)
            lo += 1
    T = frozenset(make_edge(a, b) for a, b in zip(seq, seq[1:]) if is_chord(n, (a, b)))
    # path p0, p2, p_{n-1}, p3, p_{n-2}, ...
    seq2 = [0]
    lo, hi = 2, n - 1
    while lo <= hi:
        seq2.append(lo)
        lo += 1
        if lo <= hi:
            seq2.append(hi)
            hi -= 1
    T2 = frozenset(make_edge(a, b) for a, b in zip(seq2, seq2[1:]) if is_chord(n, (a, b)))
    _check_triangulation(n, T)
    _check_triangulation(n, T2)
    X = frozenset(flip_partner(verts, T, c) for c in T)
    if len(X) != n - 3 or X & T2 or T2 == T:
        raise ConvexError(f"no second zigzag avoids the partner set for n = {n}")
    return realize(n, T), X, realize(n, T2)


def flip_to_star(n: int, T, p: int, X: Iterable[Sequence[int]] = ()) -> FlipPath:
    """Flip ``T`` to the star at ``p``; each flip adds a chord at ``p``."""
    X = _forbidden(n, X)
    chords = chords_of(T)
    _check_triangulation(n, chords)
    if not 0 <= p < n:
        raise ConvexError(f"vertex {p} out of range")
    if any(p in c for c in X):
        raise ConvexError(f"vertex {p} is incident to a forbidden chord")
    if chords & X:
        raise ConvexError("start triangulation uses a forbidden chord")
    moves, _ = _star_moves(list(range(n)), chords, p, X)
    return FlipPath(realize(n, chords), moves)


def _avoiding(verts: list[int], X: Chords) -> Chords:
    m = len(verts)
    if m <= 3:
        return frozenset()
    for p in verts:
        if not any(p in c for c in X):
            return star(verts, p)
    # every vertex is covered, so some ear chord is free
    for t in range(m):
        e = make_edge(verts[t - 1], verts[(t + 1) % m])
        if e not in X:
            rest = _without(verts, verts[t])
            return _avoiding(rest, _restrict(rest, X)) | {e}
    raise ConvexError("every ear is forbidden")  # pragma: no cover


def avoiding_triangulation(n: int, X: Iterable[Sequence[int]] = ()) -> Triangulation:
    """A triangulation using no chord of ``X`` (requires ``|X| <= n - 3``)."""
    X = _forbidden(n, X)
    if len(X) > n - 3:
        raise ConvexError(f"|X| = {len(X)} exceeds n - 3 = {n - 3}")
    return realize(n, _avoiding(list(range(n)), X))


def _connect(verts: list[int], X: Chords, S: Chords, T: Chords) -> list[FlipMove]:
    if S == T:
        return []
    X = _restrict(verts, X)
    for p in verts:
        if not any(p in c for c in X):
            to_s, _ = _star_moves(verts, S, p, X)
            to_t, _ = _star_moves(verts, T, p, X)
            return to_s + _reverse(to_t)
    ears_s = ears(verts, S)
    ears_t = dict((e, q) for q, e in ears(verts, T))
    for q, e in ears_s:
        if e in ears_t:
            return _shared_ear(verts, X, S, T, q, e)
    for q1, e1 in ears_s:
        for q2, e2 in ears(verts, T):
            if chords_cross(verts, e1, e2) or q1 == q2:
                continue
            P1 = _without(verts, q1)
            S1 = S - {e1}
            P2 = _without(P1, q2)
            X1 = _restrict(P1, X)
            R1 = _avoiding(P2, _restrict(P2, X1)) | {e2}
            first = _connect(P1, X1, S1, R1)
            R = R1 | {e1}
            return first + _shared_ear(verts, X, R, T, q2, e2)
    # only a quadrilateral has no non-crossing pair of ears
    if len(verts) == 4 and not X:
        (c,) = S
        return [FlipMove(c, flip_partner(verts, S, c))]
    raise ConvexError("no pair of non-crossing ears")  # pragma: no cover


def _shared_ear(verts, X, S, T, q, e) -> list[FlipMove]:
    rest = _without(verts, q)
    return _connect(rest, _restrict(rest, X), S - {e}, T - {e})


def connect_avoiding(n: int, X: Iterable[Sequence[int]], S, T, max_moves: int | None = None) -> FlipPath:
    """Flip path from ``S`` to ``T`` that never uses a chord of ``X`` (``|X| <= n - 4``)."""
    X = _forbidden(n, X)
    if len(X) > n - 4:
        raise ConvexError(f"|X| = {len(X)} exceeds n - 4 = {n - 4}")
    S, T = chords_of(S), chords_of(T)
    for name, Q in (("S", S), ("T", T)):
        _check_triangulation(n, Q)
        if Q & X:
            raise ConvexError(f"{name} uses a forbidden chord")
    moves = _connect(list(range(n)), X, S, T)
    if max_moves is None:
        max_moves = 2 * n * n
    if len(moves) > max_moves:
        raise ConvexError(f"flip path of length {len(moves)} exceeds the bound {max_moves}")
    return FlipPath(realize(n, S), moves)


def check_path(path: FlipPath, X: Iterable[Sequence[int]] = ()) -> Triangulation:
    """Replay ``path`` with geometric flip checks, asserting no triangulation uses ``X``."""
    X = frozenset(make_edge(*c) for c in X)
    T = path.start
    for T in path.triangulations():
        bad = X & T.edge_set
        if bad:
            raise ConvexError(f"path visits a triangulation containing {sorted(bad)[0]}")
    return T


__all__ = [
    "ConvexChordSystem", "ConvexError", "FlipPath", "all_chords", "avoiding_triangulation",
    "check_path", "chords_cross", "chords_of", "connect_avoiding", "ears", "flip_partner",
    "flip_to_star", "is_chord", "realize", "star", "zigzag_cut_set",
]
