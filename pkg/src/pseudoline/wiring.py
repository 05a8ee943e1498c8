"""Wiring diagrams: the combinatorial encoding of a simple Euclidean arrangement.

A diagram has ``n`` wires, numbered 1..n top to bottom at the far left, and a
sequence of n(n-1)/2 swaps.  Each swap names a track position t (1-based,
1 <= t <= n-1) and crosses the two wires currently at positions t and t+1.
One swap per step keeps the arrangement simple by construction: no three
wires ever meet at a point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BadTrack,
    DoubleCross,
    EmptySubset,
    ParseError,
    WrongLength,
)

__all__ = [
    "WiringDiagram",
    "validate_wiring",
    "induced_subarrangement",
    "InducedResult",
    "parse_diagram",
    "format_diagram",
]


@dataclass(frozen=True)
class WiringDiagram:
    """A validated wiring diagram.  Construct via :func:`validate_wiring`."""

    n: int
    swaps: tuple[int, ...]

    @property
    def num_steps(self) -> int:
        return self.n * (self.n - 1) // 2

    def crossing_pairs(self) -> list[tuple[int, int]]:
        """Per step, the wire pair that crosses, as (upper, lower) before the swap."""
        perm = list(range(1, self.n + 1))
        out = []
        for t in self.swaps:
            u, v = perm[t - 1], perm[t]
            out.append((u, v))
            perm[t - 1], perm[t] = v, u
        return out

    def mirror_vertical(self) -> "WiringDiagram":
        """Top-bottom reflection: track t becomes n-t."""
        return WiringDiagram(self.n, tuple(self.n - t for t in self.swaps))

    def reverse_sweep(self) -> "WiringDiagram":
        """Left-right reflection: the swap sequence reversed."""
        return WiringDiagram(self.n, tuple(reversed(self.swaps)))


def validate_wiring(n: int, swaps) -> WiringDiagram:
    """Check a swap sequence and return the immutable diagram.

    Raises WrongLength, BadTrack, or DoubleCross.  A sequence of the right
    length in which no pair crosses twice necessarily crosses every pair
    exactly once and ends in reversed wire order.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    swaps = tuple(int(t) for t in swaps)
    expected = n * (n - 1) // 2
    if len(swaps) != expected:
        raise WrongLength(n, expected, len(swaps))
    perm = list(range(1, n + 1))
    crossed = set()
    for step, t in enumerate(swaps, start=1):
        if not 1 <= t <= n - 1:
            raise BadTrack(t, n, step)
        u, v = perm[t - 1], perm[t]
        pair = (v, u) if v < u else (u, v)
        if pair in crossed:
            raise DoubleCross(pair, step)
        crossed.add(pair)
        perm[t - 1], perm[t] = v, u
    assert perm == list(range(n, 0, -1))
    return WiringDiagram(n, swaps)


@dataclass(frozen=True)
class InducedResult:
    """Induced subarrangement plus the crossing/wire correspondences.

    wire_map: parent wire id -> child wire id (kept wires only).
    step_map: parent step index (0-based) -> child step index, for steps
    whose crossing survives.
    """

    diagram: WiringDiagram
    wire_map: dict[int, int]
    step_map: dict[int, int]


def induced_subarrangement(d: WiringDiagram, keep) -> InducedResult:
    """Restrict ``d`` to the wires in ``keep``.

    The child swap sequence is the subsequence of crossings between kept
    wires, with tracks re-indexed among the kept wires.  The relative order
    of surviving crossings is preserved.
    """
    keep = set(keep)
    if not keep:
        raise EmptySubset("keep must be a nonempty wire subset")
    bad = keep - set(range(1, d.n + 1))
    if bad:
        raise ValueError(f"unknown wires: {sorted(bad)}")
    wire_map = {w: i + 1 for i, w in enumerate(sorted(keep))}
    perm = list(range(1, d.n + 1))
    sub_swaps = []
    step_map = {}
    for step, t in enumerate(d.swaps):
        u, v = perm[t - 1], perm[t]
        if u in keep and v in keep:
            # u sits directly above v, so also adjacent among kept wires
            sub_track = sum(1 for w in perm[: t - 1] if w in keep) + 1
            step_map[step] = len(sub_swaps)
            sub_swaps.append(sub_track)
        perm[t - 1], perm[t] = v, u
    sub = validate_wiring(len(keep), sub_swaps)
    return InducedResult(sub, wire_map, step_map)


def parse_diagram(text: str) -> WiringDiagram:
    """Parse the two-line text format: ``n`` then space-separated tracks."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"expected wire count, got {lines[0]!r}", 1) from None
    if n < 1:
        raise ParseError(f"wire count must be >= 1, got {n}", 1)
    tokens = lines[1].split() if len(lines) > 1 else []
    swaps = []
    for col, tok in enumerate(tokens, start=1):
        try:
            swaps.append(int(tok))
        except ValueError:
            raise ParseError(f"bad track {tok!r}", 2, col) from None
    try:
        return validate_wiring(n, swaps)
    except (WrongLength, BadTrack, DoubleCross) as exc:
        raise ParseError(str(exc), 2) from exc


def format_diagram(d: WiringDiagram) -> str:
    """Inverse of :func:`parse_diagram`."""
    return f"{d.n}\n{' '.join(str(t) for t in d.swaps)}\n"
