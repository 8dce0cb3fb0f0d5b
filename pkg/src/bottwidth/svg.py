"""Plain SVG drawings of lattice polygons."""
from __future__ import annotations

import math
from fractions import Fraction

from .polytope import LatticePolytope, cyclic_vertices


def _num(x) -> str:
    s = f"{float(x):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(P: LatticePolytope, unit: int = 40, margin: int = 1) -> str:
    """Polygon in boundary order over the integer grid, facets labelled ``eta_i`` (1-based)."""
    if P.dim != 2:
        raise ValueError("SVG supports dimension 2 only")
    cycle = cyclic_vertices(P)
    xs = [v.point[0] for v in cycle]
    ys = [v.point[1] for v in cycle]
    x0, x1 = math.floor(min(xs)) - margin, math.ceil(max(xs)) + margin
    y0, y1 = math.floor(min(ys)) - margin, math.ceil(max(ys)) + margin
    width, height = (x1 - x0) * unit, (y1 - y0) * unit

    def sx(x):
        return _num((Fraction(x) - x0) * unit)

    def sy(y):
        return _num((y1 - Fraction(y)) * unit)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for x in range(x0, x1 + 1):
        lines.append(f'<line x1="{sx(x)}" y1="0" x2="{sx(x)}" y2="{height}"/>')
    for y in range(y0, y1 + 1):
        lines.append(f'<line x1="0" y1="{sy(y)}" x2="{width}" y2="{sy(y)}"/>')
    lines.append("</g>")
    pts = " ".join(f"{sx(v.point[0])},{sy(v.point[1])}" for v in cycle)
    lines.append(f'<polygon points="{pts}" fill="#cfe2f3" stroke="#1f4e79" stroke-width="2"/>')
    lines.append('<g font-family="sans-serif" font-size="12" fill="#1f4e79">')
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        (f,) = a.active_facets & b.active_facets
        mx = (a.point[0] + b.point[0]) / 2
        my = (a.point[1] + b.point[1]) / 2
        eta = P.normals[f]
        # nudge the label outward along the normal
        norm = math.hypot(*eta)
        lx = float((mx - x0) * unit) + 14 * eta[0] / norm
        ly = float((y1 - my) * unit) - 14 * eta[1] / norm
        lines.append(f'<text x="{_num(lx)}" y="{_num(ly)}" text-anchor="middle">eta{f + 1}</text>')
    lines.append("</g>")
    for v in cycle:
        lines.append(f'<circle cx="{sx(v.point[0])}" cy="{sy(v.point[1])}" r="3" fill="#1f4e79"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
