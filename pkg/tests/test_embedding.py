from fractions import Fraction

import pytest

from pseudoline.cells import build_cell_complex
from pseudoline.embedding import extract_diagram, face_containing, grid_embedding
from pseudoline.enumeration import raw_words
from pseudoline.errors import OnBoundary
from pseudoline.wiring import WiringDiagram, validate_wiring


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_roundtrip_exhaustive_small(n):
    for word in raw_words(n):
        d = WiringDiagram(n, word)
        emb = grid_embedding(d)
        assert extract_diagram(emb) == d


def test_witness_points_locate_their_face():
    d = validate_wiring(5, [1, 2, 1, 3, 4, 3, 2, 1, 3, 2])
    cx = build_cell_complex(d)
    emb = grid_embedding(d, cx)
    for f in range(cx.num_faces):
        assert face_containing(cx, emb.witness[f], emb) == f


def test_on_boundary():
    d = validate_wiring(3, [1, 2, 1])
    cx = build_cell_complex(d)
    emb = grid_embedding(d, cx)
    # far left, wire 1 sits at y = 0
    with pytest.raises(OnBoundary):
        face_containing(cx, (Fraction(-10), Fraction(0)), emb)


def test_coordinates_are_exact():
    d = validate_wiring(4, [2, 1, 3, 2, 1, 3])
    emb = grid_embedding(d)
    for poly in emb.polylines:
        for x, y in poly:
            assert isinstance(x, Fraction) and isinstance(y, Fraction)
    for x, y in emb.witness:
        assert isinstance(x, Fraction) and isinstance(y, Fraction)


def test_wire_y_monotone_pieces():
    d = validate_wiring(3, [1, 2, 1])
    emb = grid_embedding(d)
    # wire 1 starts at the top (y=0) and ends at the bottom (y=-2)
    assert emb.wire_y(1, Fraction(-5)) == 0
    assert emb.wire_y(1, Fraction(10)) == -2
