"""SVG rendering: wiring diagrams as x-monotone polylines, straight-line
arrangements as segments.  Presentation only — nothing here feeds back into
the exact computations."""

from __future__ import annotations

from fractions import Fraction

from .cells import CellComplex, build_cell_complex
from .embedding import GridEmbedding, grid_embedding
from .lines import LineArrangement, crossing_point
from .wiring import WiringDiagram

__all__ = ["render_diagram", "render_lines"]

FACE_FILL = {3: "#f4c7c3", 4: "#c3d7f4"}
OTHER_FILL = "#c8e6c9"
MARGIN = 1
SCALE = 48


def _fmt(v: Fraction | float) -> str:
    return f"{float(v):.3f}"


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _face_polygon(cx: CellComplex, emb: GridEmbedding, f: int) -> list[tuple[Fraction, Fraction]]:
    """Boundary of a bounded face as polyline points, counter-clockwise."""
    pts: list[tuple[Fraction, Fraction]] = []
    for eid in cx.boundary_cycle(f):
        w = cx.edge_wire(eid)
        s1, s2 = cx.edge_span(eid)
        x1, x2 = Fraction(min(s1, s2)), Fraction(max(s1, s2))
        poly = emb.polylines[w - 1]
        seg = [(x1, emb.wire_y(w, x1))]
        seg += [p for p in poly if x1 < p[0] < x2]
        seg.append((x2, emb.wire_y(w, x2)))
        if pts and pts[-1] != seg[0]:
            seg.reverse()
        if pts:
            seg = seg[1:]
        pts.extend(seg)
    return pts[:-1] if pts and pts[0] == pts[-1] else pts


def render_diagram(d: WiringDiagram, cx: CellComplex | None = None) -> str:
    cx = cx or build_cell_complex(d)
    emb = grid_embedding(d, cx)
    n, steps = d.n, d.num_steps
    x_lo, x_hi = -MARGIN, steps + MARGIN
    y_lo, y_hi = -(n - 1) - MARGIN, MARGIN

    def tx(x):
        return (float(x) - x_lo) * SCALE

    def ty(y):
        return (y_hi - float(y)) * SCALE

    body = []
    for f in cx.bounded_faces():
        pts = _face_polygon(cx, emb, f)
        fill = FACE_FILL.get(cx.face_side_count(f), OTHER_FILL)
        coords = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in pts)
        body.append(f'<polygon points="{coords}" fill="{fill}" stroke="none" '
                    f'class="face side-{cx.face_side_count(f)}"/>')
    for w in range(1, n + 1):
        poly = emb.polylines[w - 1]
        pts = [(Fraction(x_lo), emb.wire_y(w, Fraction(x_lo)))]
        pts += list(poly)
        pts.append((Fraction(x_hi), emb.wire_y(w, Fraction(x_hi))))
        coords = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in pts)
        body.append(f'<polyline points="{coords}" fill="none" stroke="#333" '
                    f'stroke-width="2" class="wire wire-{w}"/>')
    return _svg((x_hi - x_lo) * SCALE, (y_hi - y_lo) * SCALE, body)


def render_lines(arr: LineArrangement) -> str:
    lines = arr.lines
    xs, ys = [], []
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            x, y = crossing_point(lines[i], lines[j])
            xs.append(x)
            ys.append(y)
    pad = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1)) / 4
    x_lo, x_hi = min(xs) - pad, max(xs) + pad
    y_lo, y_hi = min(ys) - pad, max(ys) + pad
    scale = SCALE * 8 / float(x_hi - x_lo)

    def tx(x):
        return (float(x) - float(x_lo)) * scale

    def ty(y):
        return (float(y_hi) - float(y)) * scale

    body = []
    for i, l in enumerate(lines):
        body.append(
            f'<line x1="{_fmt(tx(x_lo))}" y1="{_fmt(ty(l.y_at(x_lo)))}" '
            f'x2="{_fmt(tx(x_hi))}" y2="{_fmt(ty(l.y_at(x_hi)))}" '
            f'stroke="#333" stroke-width="1.5" class="line line-{i}"/>'
        )
    return _svg(float(x_hi - x_lo) * scale, float(y_hi - y_lo) * scale, body)
