"""Constructive stretching of diagrams whose every wire carries the (>=5)-gon.

The recursion deletes one wire adjacent to the central polygon, realizes the
remainder with straight lines, and re-inserts the wire as a line whose slope
sits between the slopes of the lines it must separate, translated slightly
into the region spanned by the central face.  Small instances (n <= 6) are
realized directly: lines tangent to the unit circle at random rational
points, resampled until the extracted diagram is isomorphic to the target.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .analysis import critical_edges, find_unique_ge5, is_in_Im
from .cells import CellComplex, build_cell_complex
from .errors import (
    BaseCaseExhausted,
    ConcurrentLines,
    DuplicateSlope,
    EpsilonExhausted,
    NoConsecutiveTriple,
    NotInIm,
)
from .lines import Line, LineArrangement, crossing_point, lines_to_diagram
from .isomorphism import find_isomorphism, isomorphic
from .wiring import WiringDiagram, induced_subarrangement

__all__ = ["RealizerState", "select_insertion_frame", "realize_im", "BASE_N"]

BASE_N = 6  # below this the recursion frame is not guaranteed to exist


@dataclass
class RealizerState:
    """Insertion frame: three consecutive non-critical edges of P."""

    diagram: WiringDiagram
    P: int
    edges: tuple[int, int, int]  # a', b', c'
    wires: tuple[int, int, int]  # a, b, c
    seq: dict[int, tuple[int, ...]]  # wire -> crossing order, P on the left
    k: int  # a_k = c
    t: int  # b_t = a
    r: int  # c_r = a
    regions: dict[int, str]  # other wire -> "R2" | "R4"
    H: tuple[int, ...]  # a_1 .. a_{k-r-1}


def crossing_sequence(d: WiringDiagram, cx: CellComplex, P: int, w: int) -> tuple[int, ...]:
    """Wires in the order w crosses them, w directed with face P on its left."""
    crossings = cx.crossings
    partners = []
    for s in cx.wire_crossing_steps(w):
        c = crossings[s]
        partners.append(c.wire_b if c.wire_a == w else c.wire_a)
    for eid in cx.face_edges(P):
        e = cx.edge(eid)
        if e.wire == w:
            if e.left_face != P:  # P below: w must run right to left
                partners.reverse()
            return tuple(partners)
    raise ValueError(f"face {P} has no edge on wire {w}")


def _try_frame(d: WiringDiagram, cx: CellComplex, P: int,
               ea: int, eb: int, ec: int) -> RealizerState | None:
    n = d.n
    a, b, c = (cx.edge(e).wire for e in (ea, eb, ec))
    seq = {w: crossing_sequence(d, cx, P, w) for w in (a, b, c)}
    sa, sb, sc = seq[a], seq[b], seq[c]
    k = sa.index(c) + 1
    t = sb.index(a) + 1
    r = sc.index(a) + 1
    ok = (
        3 <= k <= n - 1 and 2 <= t <= n - 3 and 1 <= r <= n - 3
        and r <= t <= k - 1
        and sa[k - 2] == b  # a_{k-1} = b (triangle on a')
        and sb[t] == c      # b_{t+1} = c (triangle on b')
        and sc[r] == b      # c_{r+1} = b (triangle on c')
    )
    if not ok:
        return None
    # interleaving identities around the two crossing fans
    for j in range(1, t):
        if sb[t - j - 1] != sa[k - j - 2]:
            return None
        if j <= r - 1 and sb[t - j - 1] != sc[r - j - 1]:
            return None
    for i in range(1, n - t - 1):
        if sb[t + i] != sc[r + i]:
            return None
        if i <= n - k - 1 and sb[t + i] != sa[k + i - 1]:
            return None
    H = sa[: k - r - 1]
    for ell in range(1, k - r):
        if sc[n + r - k + ell - 1] != sa[ell - 1]:
            return None
    regions = {w: "R2" for w in sa[: k - 2]}
    regions.update({w: "R4" for w in sa[k:]})
    if set(regions) != set(range(1, n + 1)) - {a, b, c}:
        return None
    return RealizerState(d, P, (ea, eb, ec), (a, b, c), seq, k, t, r, regions, H)


def select_insertion_frame(d: WiringDiagram, cx: CellComplex | None = None) -> RealizerState:
    """Pick three consecutive non-critical edges of P, in a working orientation."""
    if cx is None:
        cx = build_cell_complex(d)
    if not is_in_Im(d, cx).member:
        raise NotInIm(f"diagram {d.swaps} has no all-wire (>=5)-gon")
    P = find_unique_ge5(cx)
    flags = critical_edges(cx, P)
    cycle = cx.boundary_cycle(P)
    m = len(cycle)
    for i in range(m):
        trip = tuple(cycle[(i + j) % m] for j in range(3))
        if any(flags[e] for e in trip):
            continue
        for ea, eb, ec in (trip, trip[::-1]):
            st = _try_frame(d, cx, P, ea, eb, ec)
            if st is not None:
                return st
    raise NoConsecutiveTriple(f"no usable frame on face {P}")


def _tangent_sample(n: int, rng: random.Random) -> LineArrangement:
    """n lines tangent to the unit circle at distinct rational points."""
    ts: list[Fraction] = []
    while len(ts) < n:
        t = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if t == 0 or t in ts or any(t == -1 / u for u in ts):
            continue
        ts.append(t)
    lines = []
    for t in ts:
        px = (1 - t * t) / (1 + t * t)
        py = 2 * t / (1 + t * t)
        # tangent px*x + py*y = 1, never vertical since t != 0
        lines.append(Line(-px / py, 1 / py))
    return LineArrangement(tuple(lines))


def _realize_base(d: WiringDiagram, seed: int) -> LineArrangement:
    if d.n % 2 == 0:
        from .necklace import build_arrangement, enumerate_selfdual

        for beads in enumerate_selfdual(d.n // 2):
            arr, nd = build_arrangement(d.n // 2, beads)
            if isomorphic(nd, d):
                return arr
    rng = random.Random(seed)
    for _ in range(20000):
        arr = _tangent_sample(d.n, rng)
        try:
            res = lines_to_diagram(arr)
        except (DuplicateSlope, ConcurrentLines):
            continue
        if isomorphic(res.diagram, d):
            return arr
    raise BaseCaseExhausted(f"no realization found for {d.swaps} with seed {seed}")


def _mirror(lines: list[Line]) -> list[Line]:
    return [Line(-l.slope, l.intercept) for l in lines]


def _shear_rotate(lines: list[Line], g: Fraction) -> list[Line]:
    # (x, y) -> (x, y - g*x) then (x, y) -> (y, -x); sends slope g to infinity
    out = []
    for l in lines:
        s = l.slope - g
        assert s != 0
        out.append(Line(-1 / s, l.intercept / s))
    return out


def _is_cyclic_ascending(vals: list[Fraction]) -> bool:
    desc = sum(1 for i in range(len(vals) - 1) if vals[i] > vals[i + 1])
    return desc == 0 or (desc == 1 and vals[-1] < vals[0])


def _normalize_slopes(lines: list[Line], order: list[int]) -> list[Line]:
    """Affine moves until the lines listed in ``order`` have ascending slopes."""
    vals = [lines[i].slope for i in order]
    if not _is_cyclic_ascending(vals):
        lines = _mirror(lines)
        vals = [lines[i].slope for i in order]
    assert _is_cyclic_ascending(vals)
    if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
        # rotate the wrap gap (vals[-1], vals[0]) off to infinity
        inside = sorted(s for l in lines if vals[-1] <= (s := l.slope) <= vals[0])
        g = (inside[0] + inside[1]) / 2
        lines = _shear_rotate(lines, g)
        vals = [lines[i].slope for i in order]
    assert all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))
    return lines


def _face_point(lines: list[Line], res, f: int, cx: CellComplex) -> tuple[Fraction, Fraction]:
    """Centroid of a bounded convex face of a line arrangement."""
    line_of_wire = {w: i for i, w in res.wire_of_line.items()}
    pts = []
    crossings = cx.crossings
    seen = set()
    for eid in cx.face_edges(f):
        for s in cx.edge_span(eid):
            if s is not None and s not in seen:
                seen.add(s)
                cr = crossings[s]
                pts.append(crossing_point(lines[line_of_wire[cr.wire_a]],
                                          lines[line_of_wire[cr.wire_b]]))
    x = sum(p[0] for p in pts) / len(pts)
    y = sum(p[1] for p in pts) / len(pts)
    return x, y


def realize_im(d: WiringDiagram, seed: int = 0) -> LineArrangement:
    """Exact straight-line realization, verified isomorphic to the input."""
    cx = build_cell_complex(d)
    if not is_in_Im(d, cx).member:
        raise NotInIm(f"diagram {d.swaps} has no all-wire (>=5)-gon")
    if d.n <= BASE_N:
        return _realize_base(d, seed)
    st = select_insertion_frame(d, cx)
    a, b, c = st.wires
    kept = [w for w in range(1, d.n + 1) if w != b]
    ind = induced_subarrangement(d, kept)
    sub_arr = realize_im(ind.diagram, seed)

    # fresh wire-to-line correspondence, independent of how sub_arr was built
    res = lines_to_diagram(sub_arr)
    iso = find_isomorphism(ind.diagram, res.diagram)
    line_of = {w: i for i, w in res.wire_of_line.items()}
    line_of_parent = {w: line_of[iso.wire_map[ind.wire_map[w]]] for w in kept}

    lines = list(sub_arr.lines)
    order = [line_of_parent[w] for w in (a, *st.H, c)]
    lines = _normalize_slopes(lines, order)

    got = _insert(d, lines, order, st.k - st.t)
    if got is None and not st.H:
        # Two slopes cannot pin the plane's orientation: the sector between
        # the a* and c* directions may be the wrong one of the two at v.
        # Rotate that sector off to infinity and retry on the other side.
        slopes = [lines[i].slope for i in order]
        g = _fresh_slope(lines, slopes[0], slopes[1])
        lines = _mirror(_shear_rotate(lines, g))
        got = _insert(d, lines, order, st.k - st.t)
    if got is None:
        raise EpsilonExhausted(f"insertion failed for {d.swaps}")
    return got


def _fresh_slope(lines: list[Line], lo: Fraction, hi: Fraction) -> Fraction:
    """A slope strictly inside (lo, hi) distinct from every line's slope."""
    inside = sorted({lo, hi} | {l.slope for l in lines if lo < l.slope < hi})
    return (inside[0] + inside[1]) / 2


def _insert(d: WiringDiagram, lines: list[Line], order: list[int],
            pos: int) -> LineArrangement | None:
    """Insert d* between the chain slopes at ``pos`` and verify; None on failure."""
    slopes = [lines[i].slope for i in order]
    assert all(slopes[i] < slopes[i + 1] for i in range(len(slopes) - 1))
    sigma = _fresh_slope(lines, slopes[pos - 1], slopes[pos])

    vx, vy = crossing_point(lines[order[0]], lines[order[-1]])
    # point interior to the central face locates the target quadrant
    res2 = lines_to_diagram(LineArrangement(tuple(lines)))
    cx2 = build_cell_complex(res2.diagram)
    qx, qy = _face_point(lines, res2, find_unique_ge5(cx2), cx2)
    ux, uy = qx - vx, qy - vy

    eta = Fraction(1)
    base_intercept = vy - sigma * vx
    for _ in range(64):
        d_star = Line(sigma, base_intercept + eta * (uy - sigma * ux))
        try:
            full = lines_to_diagram(LineArrangement(tuple(lines) + (d_star,)))
        except ConcurrentLines:
            eta /= 2
            continue
        if isomorphic(full.diagram, d):
            return LineArrangement(tuple(lines) + (d_star,))
        eta /= 2
    return None
