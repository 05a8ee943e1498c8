"""Cell-decomposition isomorphism via canonical incidence certificates.

Two arrangements are combinatorially equivalent when there is an incidence
and dimension preserving bijection between their cell decompositions,
unbounded cells included.  We canonically label the incidence graph (nodes =
cells coloured by dimension, arcs = incidence between consecutive
dimensions) by iterative refinement with backtracking, and compare the
resulting certificates.  Certificate equality is therefore an equivalence
relation and is invariant under any relabeling, including the two sweep
reflections of the wiring encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellComplex
from .wiring import WiringDiagram

__all__ = [
    "CanonicalCertificate",
    "canonical_form",
    "isomorphic",
    "find_isomorphism",
    "incidence_graph",
]


@dataclass(frozen=True)
class CanonicalCertificate:
    data: tuple

    def __lt__(self, other):
        return self.data < other.data


def incidence_graph(cx: CellComplex):
    """Adjacency lists + dimension colours for the cell incidence graph.

    Node ids: crossings 0..V-1, then edge cells V..V+E-1, then faces.
    """
    v, e = cx.num_vertices, cx.num_edges
    total = v + e + cx.num_faces
    adj: list[list[int]] = [[] for _ in range(total)]
    colors = [0] * v + [1] * e + [2] * cx.num_faces
    for eid in range(e):
        ge = v + eid
        for s in cx.edge_span(eid):
            if s is not None:
                adj[ge].append(s)
                adj[s].append(ge)
        for f in (cx.sw.upper_face[eid], cx.sw.lower_face[eid]):
            gf = v + e + f
            adj[ge].append(gf)
            adj[gf].append(ge)
    return adj, colors


def _refine(adj, colors):
    """1-dimensional Weisfeiler-Leman colour refinement to a fixed point."""
    colors = list(colors)
    while True:
        keys = [
            (colors[i], tuple(sorted(colors[j] for j in adj[i])))
            for i in range(len(adj))
        ]
        rank = {k: r for r, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _certificate(adj, colors, lab):
    inv = [0] * len(lab)
    for node, pos in enumerate(lab):
        inv[pos] = node
    col = tuple(colors[inv[p]] for p in range(len(lab)))
    arcs = set()
    for i in range(len(adj)):
        for j in adj[i]:
            a, b = lab[i], lab[j]
            arcs.add((a, b) if a < b else (b, a))
    return (col, tuple(sorted(arcs)))


def _canon_search(adj, colors):
    """Minimal certificate and an achieving labeling (node -> position)."""
    colors = _refine(adj, colors)
    classes: dict[int, list[int]] = {}
    for node, c in enumerate(colors):
        classes.setdefault(c, []).append(node)
    target = None
    for c in sorted(classes):
        if len(classes[c]) > 1:
            target = classes[c]
            break
    if target is None:
        lab = [0] * len(adj)
        order = sorted(range(len(adj)), key=lambda i: colors[i])
        for pos, node in enumerate(order):
            lab[node] = pos
        base = [colors[i] for i in range(len(adj))]
        return _certificate(adj, base, lab), lab
    best = None
    for v in target:
        branched = list(colors)
        branched[v] = -1  # individualize: strictly smaller than any colour
        cert, lab = _canon_search(adj, branched)
        if best is None or cert < best[0]:
            best = (cert, lab)
    return best


_cert_cache: dict[tuple[int, tuple[int, ...]], tuple] = {}


def _canon_of_diagram(d: WiringDiagram, cx: CellComplex | None = None):
    key = (d.n, d.swaps)
    hit = _cert_cache.get(key)
    if hit is None:
        adj, colors = incidence_graph(cx if cx is not None else CellComplex(d))
        hit = _canon_search(adj, colors)
        _cert_cache[key] = hit
    return hit


def canonical_form(d: WiringDiagram) -> CanonicalCertificate:
    cert, _ = _canon_of_diagram(d)
    return CanonicalCertificate(cert)


def isomorphic(d1: WiringDiagram, d2: WiringDiagram) -> bool:
    if d1.n != d2.n:
        return False
    return canonical_form(d1) == canonical_form(d2)


@dataclass(frozen=True)
class CellIso:
    vertex_map: dict[int, int]
    edge_map: dict[int, int]
    face_map: dict[int, int]
    wire_map: dict[int, int]


def find_isomorphism(d1: WiringDiagram, d2: WiringDiagram) -> CellIso | None:
    """An explicit cell bijection realizing equivalence, or None.

    Composes the two canonical labelings.  Wires map to wires because
    collinearity at a crossing (the pairing of opposite edges) is exactly
    "shares no face", which any incidence isomorphism preserves.
    """
    if d1.n != d2.n:
        return None
    cx1, cx2 = CellComplex(d1), CellComplex(d2)
    (cert1, lab1) = _canon_of_diagram(d1, cx1)
    (cert2, lab2) = _canon_of_diagram(d2, cx2)
    if cert1 != cert2:
        return None
    inv2 = [0] * len(lab2)
    for node, pos in enumerate(lab2):
        inv2[pos] = node
    node_map = [inv2[lab1[i]] for i in range(len(lab1))]
    v, e = cx1.num_vertices, cx1.num_edges
    vertex_map = {s: node_map[s] for s in range(v)}
    edge_map = {eid: node_map[v + eid] - v for eid in range(e)}
    face_map = {f: node_map[v + e + f] - v - e for f in range(cx1.num_faces)}
    wire_map: dict[int, int] = {}
    for w in range(1, d1.n + 1):
        targets = {cx2.edge_wire(edge_map[eid]) for eid in cx1.wire_edge_ids(w)}
        assert len(targets) == 1, "incidence iso split a wire"
        wire_map[w] = targets.pop()
    assert len(set(wire_map.values())) == d1.n
    return CellIso(vertex_map, edge_map, face_map, wire_map)
