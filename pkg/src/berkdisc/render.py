"""Plain-text and SVG pictures of valuation polygons (display only)."""

from __future__ import annotations

from fractions import Fraction

from .polygon import Domain, NewtonPolygon
from .valued_field import format_valuation


def _window(P: NewtonPolygon) -> Fraction:
    if P.breaks:
        return max(2 * P.breaks[-1], Fraction(1))
    return Fraction(1)


def _left_edge(P: NewtonPolygon) -> Fraction:
    return Fraction(0) if P.domain is not Domain.REAL else min(Fraction(0), *(P.breaks or (0,)))


def _label(s: Fraction, c: Fraction) -> str:
    lin = "lambda" if s == 1 else f"{format_valuation(s)}*lambda"
    if s == 0:
        return format_valuation(c)
    return lin if c == 0 else f"{format_valuation(c)} + {lin}"


def render_ascii(P: NewtonPolygon, width: int = 48, height: int = 16) -> str:
    """Character plot of ``P`` on ``[0, x_max]``; breaks marked ``+``, pieces listed below."""
    x0, x1 = _left_edge(P), _window(P)
    xs = [x0 + (x1 - x0) * Fraction(k, width - 1) for k in range(width)]
    # avoid evaluating outside an open domain at the left edge
    ys = [P.eval(x) if P.domain.contains(x) else P.pieces[0][0] * x + P.pieces[0][1] for x in xs]
    lo, hi = min(ys), max(ys)
    span = hi - lo or Fraction(1)
    grid = [[" "] * width for _ in range(height)]
    for col, y in enumerate(ys):
        row = height - 1 - round((y - lo) / span * (height - 1))
        grid[row][col] = "*"
    for b in P.breaks:
        col = round((b - x0) / (x1 - x0) * (width - 1))
        row = height - 1 - round((P.eval(b) - lo) / span * (height - 1))
        grid[row][col] = "+"
    top = format_valuation(hi)
    bottom = format_valuation(lo)
    pad = max(len(top), len(bottom))
    out = [f"v(lambda) on [{format_valuation(x0)}, {format_valuation(x1)}], domain {P.domain.value}"]
    for r, row in enumerate(grid):
        tag = top if r == 0 else bottom if r == height - 1 else ""
        out.append(f"{tag:>{pad}} |" + "".join(row).rstrip())
    out.append(" " * pad + " +" + "-" * width)
    edges = [None, *P.breaks, None]
    for k, (s, c) in enumerate(P.pieces):
        a = format_valuation(edges[k]) if edges[k] is not None else format_valuation(x0)
        b = f"{format_valuation(edges[k + 1])}]" if edges[k + 1] is not None else "inf)"
        out.append(f"  ({a}, {b}: {_label(s, c)}   slope {format_valuation(s)}")
    for b in P.breaks:
        out.append(f"  break at lambda = {format_valuation(b)}, value {format_valuation(P.eval(b))}")
    return "\n".join(out) + "\n"


def render_svg(P: NewtonPolygon, width: int = 320, height: int = 200, margin: int = 24) -> str:
    x0, x1 = _left_edge(P), _window(P)
    pts = [x0, *P.breaks, x1]
    vals = [P.pieces[0][0] * x0 + P.pieces[0][1], *(P.eval(b) for b in P.breaks), P.eval(x1)]
    lo, hi = min(vals), max(vals)
    span = hi - lo or Fraction(1)

    def sx(x):
        return margin + float((x - x0) / (x1 - x0)) * (width - 2 * margin)

    def sy(y):
        return height - margin - float((y - lo) / span) * (height - 2 * margin)

    path = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(pts, vals))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}" stroke="gray"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="gray"/>',
        f'<polyline points="{path}" fill="none" stroke="black"/>',
    ]
    for b in P.breaks:
        x, y = sx(b), sy(P.eval(b))
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        parts.append(f'<text x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="10">{format_valuation(b)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
