"""Self-dual binary necklaces and the zonogon construction.

A necklace of length 2m is self-dual when opposite beads differ.  Each
necklace class yields a straight-line arrangement of 2m lines whose central
face is a 2m-gon: the lines support a zonogon, one pair per edge direction,
and each pair is tilted so that it crosses on the side dictated by its bead.
"""

from __future__ import annotations

from fractions import Fraction

from .analysis import is_in_Im, face_census
from .cells import build_cell_complex
from .errors import ConcurrentLines, EpsilonExhausted
from .lines import Line, LineArrangement, lines_to_diagram

__all__ = [
    "totient",
    "q_formula",
    "canonical_necklace",
    "enumerate_selfdual",
    "build_arrangement",
]


def totient(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def q_formula(m: int) -> int:
    """Number of self-dual necklaces of length 2m up to the dihedral action."""
    odd_sum = sum(totient(k) * 2 ** (m // k) for k in range(1, m + 1) if m % k == 0 and k % 2 == 1)
    num = 2 * m * 2 ** ((m - 1) // 2) + odd_sum
    assert num % (4 * m) == 0
    return num // (4 * m)


def _dihedral_orbit(word: tuple[int, ...]):
    L = len(word)
    cur = word
    for _ in range(2):
        for r in range(L):
            yield cur[r:] + cur[:r]
        cur = cur[::-1]


def canonical_necklace(word: tuple[int, ...]) -> tuple[int, ...]:
    return min(_dihedral_orbit(word))


def enumerate_selfdual(m: int) -> list[tuple[int, ...]]:
    """Canonical representatives of self-dual necklaces of length 2m."""
    seen = set()
    for bits in range(2 ** m):
        half = tuple((bits >> i) & 1 for i in range(m))
        full = half + tuple(1 - b for b in half)
        seen.add(canonical_necklace(full))
    return sorted(seen)


def _zonogon_lines(m: int, beads: tuple[int, ...], eps: Fraction) -> LineArrangement:
    # Support offsets of the zonogon sum of segments t*(1, j), t in [-1, 1].
    lines = [None] * (2 * m)
    for j in range(m):
        c = Fraction(sum(abs(i - j) for i in range(m)))
        x_mid = Fraction(m - 1 - 2 * j)  # midpoint of the slope-j upper edge
        delta = eps / (j + 1)
        if beads[j] == 1:
            delta = -delta  # pair crosses at positive x
        lines[j] = Line(Fraction(j), -c)
        lines[j + m] = Line(Fraction(j) + delta, c - delta * x_mid)
    return LineArrangement(tuple(lines))


def build_arrangement(m: int, beads: tuple[int, ...]) -> tuple[LineArrangement, "WiringDiagram"]:
    """Straight-line arrangement of 2m lines realizing the necklace class.

    The tilt is halved until the arrangement is simple and its central face
    is a 2m-gon carried by all 2m lines (for m >= 3 that face is the unique
    (>=5)-gon and the membership test must pass).
    """
    if len(beads) != 2 * m or any(beads[j] + beads[j + m] != 1 for j in range(m)):
        raise ValueError("beads must be a self-dual word of length 2m")
    eps = Fraction(1, 3)
    for _ in range(64):
        arr = _zonogon_lines(m, beads, eps)
        try:
            res = lines_to_diagram(arr)
        except ConcurrentLines:
            eps /= 2
            continue
        cx = build_cell_complex(res.diagram)
        if _central_face_ok(res.diagram, cx, m):
            return arr, res.diagram
        eps /= 2
    raise EpsilonExhausted(f"no valid tilt found for beads {beads}")


def _central_face_ok(d, cx, m: int) -> bool:
    if m >= 3:
        return is_in_Im(d, cx).member and max(face_census(cx).tally) == 2 * m
    # 2m = 4: no (>=5)-gon can exist; require a 4-gon touching all 4 wires.
    for f in cx.bounded_faces():
        if cx.face_side_count(f) == 4 and len(cx.face_wires(f)) == 4:
            return True
    return False
