"""Face classification, critical edges, criticality, and counting checks.

The counting fact being verified: an arrangement with exactly one (>=5)-gon P
has n - k triangles and k + n(n-5)/2 quadrilaterals, where k counts the edges
of P adjacent to an unbounded cell of the subarrangement induced by P's
wires.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cells import CellComplex
from .errors import MultipleGe5Gons, NoGe5Gon, UnboundedFace
from .wiring import WiringDiagram, induced_subarrangement

__all__ = [
    "FaceCensus",
    "CriticalityReport",
    "TheoremReport",
    "ImResult",
    "face_census",
    "find_unique_ge5",
    "critical_edges",
    "criticality_k",
    "is_in_Im",
    "verify_counting_theorem",
    "triangle_adjacency",
    "report_json",
]


@dataclass(frozen=True)
class FaceCensus:
    tally: dict[int, int]  # side count -> number of bounded faces
    total: int

    def __getitem__(self, sides: int) -> int:
        return self.tally.get(sides, 0)


@dataclass(frozen=True)
class CriticalityReport:
    face: int  # the (>=5)-gon P in the full complex
    wires: tuple[int, ...]  # wires carrying edges of P
    k: int
    edge_flags: dict[int, bool]  # P's boundary edge id -> critical in induced


@dataclass(frozen=True)
class TheoremReport:
    n: int
    k: int
    observed_p3: int
    observed_p4: int
    expected_p3: int
    expected_p4: int
    passed: bool


@dataclass(frozen=True)
class ImResult:
    member: bool
    witness: int | None  # a wire without an edge on the gon, when not a member


def face_census(cx: CellComplex) -> FaceCensus:
    tally: dict[int, int] = {}
    total = 0
    for f in cx.bounded_faces():
        s = cx.face_side_count(f)
        tally[s] = tally.get(s, 0) + 1
        total += 1
    return FaceCensus(tally, total)


def find_unique_ge5(cx: CellComplex) -> int | None:
    hits = [f for f in cx.bounded_faces() if cx.face_side_count(f) >= 5]
    if not hits:
        return None
    if len(hits) > 1:
        raise MultipleGe5Gons(hits)
    return hits[0]


def critical_edges(cx: CellComplex, f: int) -> dict[int, bool]:
    """Per boundary edge of the bounded face ``f``: is its twin unbounded."""
    if not cx.face_bounded(f):
        raise UnboundedFace(f"face {f}")
    return {e: not cx.face_bounded(cx.twin(e, f)) for e in cx.boundary_cycle(f)}


def criticality_k(d: WiringDiagram, cx: CellComplex | None = None) -> CriticalityReport:
    """Criticality of an arrangement with exactly one (>=5)-gon P.

    Each edge of P survives unchanged into the subarrangement induced by P's
    wires (nothing crosses a face edge, and P's vertices join wires of P), so
    the edge-to-super-edge map is span-preserving; an edge counts toward k
    when the induced face across it, away from P, is unbounded.
    """
    cx = cx if cx is not None else CellComplex(d)
    p = find_unique_ge5(cx)
    if p is None:
        raise NoGe5Gon(f"n={d.n}")
    wires = tuple(sorted(cx.face_wires(p)))
    ind = induced_subarrangement(d, wires)
    sub = CellComplex(ind.diagram)
    flags: dict[int, bool] = {}
    for e in cx.boundary_cycle(p):
        w = ind.wire_map[cx.edge_wire(e)]
        l, r = cx.edge_span(e)
        l2, r2 = ind.step_map[l], ind.step_map[r]
        steps = sub.wire_crossing_steps(w)
        j = steps.index(l2)
        assert steps[j + 1] == r2, "edge endpoints not consecutive in induced"
        eid2 = (w - 1) * sub.n + j + 1
        p_above = cx.sw.upper_face[e] == p
        other = sub.sw.lower_face[eid2] if p_above else sub.sw.upper_face[eid2]
        flags[e] = not sub.face_bounded(other)
    return CriticalityReport(p, wires, sum(flags.values()), flags)


def is_in_Im(d: WiringDiagram, cx: CellComplex | None = None) -> ImResult:
    """Membership in the family where every wire carries an edge of the gon."""
    cx = cx if cx is not None else CellComplex(d)
    try:
        p = find_unique_ge5(cx)
    except MultipleGe5Gons:
        return ImResult(False, None)
    if p is None:
        return ImResult(False, None)
    wires = cx.face_wires(p)
    for w in range(1, d.n + 1):
        if w not in wires:
            return ImResult(False, w)
    # membership forces the gon to be an n-gon: one edge per wire
    assert cx.face_side_count(p) == d.n
    return ImResult(True, None)


def verify_counting_theorem(d: WiringDiagram, cx: CellComplex | None = None) -> TheoremReport:
    cx = cx if cx is not None else CellComplex(d)
    rep = criticality_k(d, cx)
    census = face_census(cx)
    n, k = d.n, rep.k
    expected_p3 = n - k
    expected_p4 = k + n * (n - 5) // 2
    observed_p3, observed_p4 = census[3], census[4]
    return TheoremReport(
        n,
        k,
        observed_p3,
        observed_p4,
        expected_p3,
        expected_p4,
        observed_p3 == expected_p3 and observed_p4 == expected_p4,
    )


def triangle_adjacency(cx: CellComplex) -> dict[int, list[int]]:
    """Per wire: the triangle faces with an edge on it."""
    out: dict[int, list[int]] = {w: [] for w in range(1, cx.n + 1)}
    for f in cx.bounded_faces():
        if cx.face_side_count(f) == 3:
            for w in sorted(cx.face_wires(f)):
                out[w].append(f)
    return out


def report_json(d: WiringDiagram) -> str:
    """Stable-key JSON summary used by the CLI and golden tests."""
    cx = CellComplex(d)
    census = face_census(cx)
    im = is_in_Im(d, cx)
    try:
        rep = criticality_k(d, cx)
        thm = verify_counting_theorem(d, cx)
        k = rep.k
        passed = thm.passed
        crit_wires = sorted(
            cx.edge_wire(e) for e, flag in rep.edge_flags.items() if flag
        )
    except (NoGe5Gon, MultipleGe5Gons):
        k, passed, crit_wires = None, None, []
    payload = {
        "n": d.n,
        "k": k,
        "census": {str(s): census.tally[s] for s in sorted(census.tally)},
        "pass": passed,
        "im": im.member,
        "critical_edges": crit_wires,
    }
    return json.dumps(payload)
