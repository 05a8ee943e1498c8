from fractions import Fraction

from pseudoline.lines import Line, LineArrangement
from pseudoline.render import render_diagram, render_lines
from pseudoline.wiring import validate_wiring


def test_render_diagram_structure():
    d = validate_wiring(5, [1, 2, 1, 3, 4, 3, 2, 1, 3, 2])
    svg = render_diagram(d)
    assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
    assert svg.count("<polyline") == 5  # one per wire
    assert svg.count("<polygon") == 6  # bounded faces
    assert 'class="face side-5"' in svg


def test_render_triangle_fill():
    svg = render_diagram(validate_wiring(3, [1, 2, 1]))
    assert svg.count("<polygon") == 1
    assert "#f4c7c3" in svg  # triangle fill


def test_render_lines():
    arr = LineArrangement(
        tuple(
            Line(Fraction(s), Fraction(b))
            for s, b in [(0, 0), (1, 0), (-1, 1)]
        )
    )
    svg = render_lines(arr)
    assert svg.startswith("<svg ")
    assert svg.count("<line") == 3
