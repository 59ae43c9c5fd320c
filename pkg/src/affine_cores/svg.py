"""Deterministic SVG drawings of the rank-2 alcove arrangement."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .errors import RankMismatchError
from .geometry import (
    AlcoveWalk, RootSystemC, distinguished_alcove, dot, fundamental_vertices, t_level,
)
from .projection import DomainParams, enumerate_domain

SCALE = 120
WALK_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _num(x) -> str:
    s = f"{float(x):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _clip(root, offset, window):
    """Endpoints of the line (x, root) = offset inside the window, or None."""
    xmin, ymin, xmax, ymax = (Fraction(v) for v in window)
    a, b = root
    pts = set()
    if b:
        for x in (xmin, xmax):
            y = (offset - a * x) / b
            if ymin <= y <= ymax:
                pts.add((x, y))
    if a:
        for y in (ymin, ymax):
            x = (offset - b * y) / a
            if xmin <= x <= xmax:
                pts.add((x, y))
    if len(pts) < 2:
        return None
    pts = sorted(pts)
    return pts[0], pts[-1]


def _offsets(root, window):
    xmin, ymin, xmax, ymax = window
    vals = [dot((x, y), root) for x in (xmin, xmax) for y in (ymin, ymax)]
    return range(floor(min(vals)), ceil(max(vals)) + 1)


class _Canvas:
    def __init__(self, window):
        self.window = tuple(Fraction(v) for v in window)
        self.items: list[str] = []

    def xy(self, p) -> str:
        xmin, _, _, ymax = self.window
        return f"{_num((p[0] - xmin) * SCALE)},{_num((ymax - p[1]) * SCALE)}"

    def line(self, p, q, style: str) -> None:
        (x1, y1), (x2, y2) = self.xy(p).split(","), self.xy(q).split(",")
        self.items.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')

    def polygon(self, pts, style: str) -> None:
        self.items.append(f'<polygon points="{" ".join(self.xy(p) for p in pts)}" {style}/>')

    def polyline(self, pts, style: str) -> None:
        self.items.append(f'<polyline points="{" ".join(self.xy(p) for p in pts)}" {style}/>')

    def circle(self, p, r: int, style: str) -> None:
        x, y = self.xy(p).split(",")
        self.items.append(f'<circle cx="{x}" cy="{y}" r="{r}" {style}/>')

    def render(self) -> str:
        xmin, ymin, xmax, ymax = self.window
        w, h = _num((xmax - xmin) * SCALE), _num((ymax - ymin) * SCALE)
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
                f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>\n')
        return head + "\n".join(self.items) + "\n</svg>\n"


def render_svg_rank2(walks: Sequence[AlcoveWalk] = (), params: DomainParams | None = None,
                     window=(-2, -2, 2, 2)) -> str:
    """Draw the arrangement in the window, the fundamental alcove, and each
    walk as a polyline through the centroids of its alcoves. With ``params``,
    also draw H (solid) and T (dashed) and fill the distinguished alcoves of
    the domain."""
    for walk in walks:
        if walk.alcoves[0].n != 2:
            raise RankMismatchError(f"can only draw rank 2, got rank {walk.alcoves[0].n}")
    if params is not None and params.n != 2:
        raise RankMismatchError(f"can only draw rank 2, got rank {params.n}")
    c = _Canvas(window)
    if params is not None:
        for v in enumerate_domain(2, params.k):
            c.polygon(distinguished_alcove(v).vertices(), 'fill="#fde9a9" stroke="none"')
    c.polygon(fundamental_vertices(2), 'fill="#9ecae1" stroke="none"')
    for root in RootSystemC(2).positive_roots:
        for m in _offsets(root, c.window):
            seg = _clip(root, m, c.window)
            if seg:
                c.line(*seg, 'stroke="#888888" stroke-width="1"')
    if params is not None:
        axis_root = (2, 0) if params.axis == 1 else (0, 2)
        for value, style in ((params.level, 'stroke="#08519c" stroke-width="3"'),
                             (t_level(params), 'stroke="#a50f15" stroke-width="2" '
                                               'stroke-dasharray="8,5"')):
            seg = _clip(axis_root, 2 * value, c.window)
            if seg:
                c.line(*seg, style)
    for idx, walk in enumerate(walks):
        color = WALK_COLORS[idx % len(WALK_COLORS)]
        pts = [a.centroid for a in walk.alcoves]
        c.polyline(pts, f'fill="none" stroke="{color}" stroke-width="3"')
        c.circle(pts[-1], 5, f'fill="{color}"')
    return c.render()
