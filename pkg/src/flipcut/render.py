"""Deterministic SVG drawings of point sets with optional edge overlays."""
from __future__ import annotations

from typing import Iterable, Sequence

from .geometry import PointSet, make_edge


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(
    P: PointSet,
    edges: Iterable[Sequence[int]] = (),
    highlight: Iterable[Sequence[int]] = (),
    width: int = 600,
) -> str:
    """SVG 1.1 document: points as circles, ``edges`` in grey, ``highlight``
    edges in the ``flip-cut`` class (red).

    The viewBox is the bounding box grown by 5% of its larger side; ``y`` is
    flipped so the picture matches the usual axes.
    """
    xs = [p.x for p in P]
    ys = [p.y for p in P]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    side = max(x1 - x0, y1 - y0, 1)
    m = 0.05 * side
    vx, vy = x0 - m, -y1 - m
    vw, vh = (x1 - x0) + 2 * m, (y1 - y0) + 2 * m
    height = max(1, round(width * vh / vw))
    r = side / 80
    sw = side / 300
    hi = sorted({make_edge(*e) for e in highlight})
    plain = sorted({make_edge(*e) for e in edges} - set(hi))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">',
        "<style>.edge{stroke:#888;} .flip-cut{stroke:#d62728;} .pt{fill:#000;}</style>",
    ]

    def line(e, cls, w):
        a, b = P[e[0]], P[e[1]]
        return (f'<line class="{cls}" x1="{a.x}" y1="{-a.y}" x2="{b.x}" y2="{-b.y}" '
                f'stroke-width="{_fmt(w)}"/>')

    out += [line(e, "edge", sw) for e in plain]
    out += [line(e, "flip-cut", 2 * sw) for e in hi]
    out += [f'<circle class="pt" cx="{p.x}" cy="{-p.y}" r="{_fmt(r)}"/>' for p in P]
    out.append("</svg>")
    return "\n".join(out) + "\n"
