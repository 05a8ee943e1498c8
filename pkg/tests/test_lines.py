from fractions import Fraction

import pytest

from pseudoline.errors import ConcurrentLines, DuplicateSlope
from pseudoline.isomorphism import isomorphic
from pseudoline.lines import (
    Line,
    LineArrangement,
    crossing_point,
    frac_str,
    lines_to_diagram,
    parse_frac,
)
from pseudoline.wiring import validate_wiring


def L(s, b):
    return Line(Fraction(s), Fraction(b))


def test_three_lines():
    # y = 0, y = x, y = -x + 1: crossings at x = 0, 1/2, 1, and the first
    # one (at x = 0) is between the two bottom wires
    res = lines_to_diagram(LineArrangement((L(0, 0), L(1, 0), L(-1, 1))))
    assert res.diagram == validate_wiring(3, [2, 1, 2])
    # smallest slope is the top wire at x -> -inf
    assert res.wire_of_line == {2: 1, 0: 2, 1: 3}


def test_crossing_point():
    x, y = crossing_point(L(1, 0), L(-1, 1))
    assert (x, y) == (Fraction(1, 2), Fraction(1, 2))


def test_duplicate_slope():
    with pytest.raises(DuplicateSlope):
        lines_to_diagram(LineArrangement((L(1, 0), L(1, 3))))


def test_concurrent_lines():
    with pytest.raises(ConcurrentLines):
        lines_to_diagram(LineArrangement((L(0, 0), L(1, 0), L(-1, 0))))


def test_four_lines_unique_class():
    arr = LineArrangement((L(0, 0), L(1, 0), L(-1, 1), L(3, -5)))
    res = lines_to_diagram(arr)
    assert isomorphic(res.diagram, validate_wiring(4, [2, 1, 3, 2, 1, 3]))


def test_frac_str_roundtrip():
    for f in (Fraction(3), Fraction(-7, 2), Fraction(0)):
        assert parse_frac(frac_str(f)) == f
