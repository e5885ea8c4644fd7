"""Text and JSON formats for point sets and triangulations."""
from __future__ import annotations

import json
import sys
from typing import Iterable, Sequence

from .geometry import GeometryError, PointSet, make_edge
from .triangulation import Triangulation, validate


class FormatError(ValueError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def parse_points(text: str) -> PointSet:
    """One ``x y`` point per line; ``#`` lines and blank lines are skipped."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer coordinate in {line!r}") from None
    try:
        return PointSet(pts)
    except GeometryError as ex:
        raise FormatError(str(ex)) from None


def format_points(P: PointSet, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"{p.x} {p.y}" for p in P]
    return "\n".join(lines) + "\n"


def read_points(path: str) -> PointSet:
    return parse_points(_read(path))


def parse_edges(text: str) -> list[tuple[int, int]]:
    """Edge list from ``{"edges": [[i, j], ...]}`` or ``i j`` lines."""
    s = text.strip()
    if s.startswith("{"):
        try:
            data = json.loads(s)
            return [make_edge(int(i), int(j)) for i, j in data["edges"]]
        except (KeyError, TypeError, ValueError) as ex:
            raise FormatError(f"bad triangulation JSON: {ex}") from None
    out = []
    for lineno, line in enumerate(s.splitlines(), 1):
        t = line.strip()
        if not t or t.startswith("#"):
            continue
        parts = t.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            out.append(make_edge(int(parts[0]), int(parts[1])))
        except ValueError as ex:
            raise FormatError(f"line {lineno}: {ex}") from None
    return out


def parse_triangulation(text: str, P: PointSet) -> Triangulation:
    return validate(P, parse_edges(text))


def read_triangulation(path: str, P: PointSet) -> Triangulation:
    return parse_triangulation(_read(path), P)


def read_edges(path: str) -> list[tuple[int, int]]:
    return parse_edges(_read(path))


def format_triangulation(edges: Iterable[Sequence[int]], as_json: bool = False) -> str:
    es = sorted(make_edge(*e) for e in edges)
    if as_json:
        return json.dumps({"edges": [list(e) for e in es]})
    return "".join(f"{i} {j}\n" for i, j in es)
