import pytest

from pseudoline.cells import build_cell_complex
from pseudoline.errors import NotInIm
from pseudoline.isomorphism import isomorphic
from pseudoline.lines import lines_to_diagram
from pseudoline.necklace import build_arrangement, enumerate_selfdual
from pseudoline.stretch import (
    BASE_N,
    crossing_sequence,
    realize_im,
    select_insertion_frame,
)
from pseudoline.wiring import validate_wiring

PENTAGON_5 = validate_wiring(5, [1, 2, 1, 3, 4, 3, 2, 1, 3, 2])


def roundtrip(d, seed=0):
    arr = realize_im(d, seed=seed)
    assert isomorphic(lines_to_diagram(arr).diagram, d)
    return arr


def test_not_in_im_rejected():
    with pytest.raises(NotInIm):
        realize_im(validate_wiring(4, [2, 1, 3, 2, 1, 3]))
    with pytest.raises(NotInIm):
        select_insertion_frame(validate_wiring(4, [2, 1, 3, 2, 1, 3]))


def test_base_case_pentagon():
    roundtrip(PENTAGON_5)


def test_base_case_seed_dependence():
    # different seeds still succeed
    roundtrip(PENTAGON_5, seed=7)


def test_crossing_sequence_orientation():
    cx = build_cell_complex(PENTAGON_5)
    from pseudoline.analysis import find_unique_ge5

    P = find_unique_ge5(cx)
    for w in range(1, 6):
        seq = crossing_sequence(PENTAGON_5, cx, P, w)
        assert sorted(seq) == [x for x in range(1, 6) if x != w]


def test_frame_invariants_n7():
    _, d = build_arrangement(4, enumerate_selfdual(4)[0])
    # delete one wire of the 8-gon diagram to get a 7-wire Im instance
    from pseudoline.wiring import induced_subarrangement

    st7 = select_insertion_frame(d)
    b = st7.wires[1]
    ind = induced_subarrangement(d, [w for w in range(1, 9) if w != b])
    assert ind.diagram.n == 7
    st = select_insertion_frame(ind.diagram)
    n = 7
    assert 3 <= st.k <= n - 1 and 2 <= st.t <= n - 3 and 1 <= st.r <= n - 3
    assert st.r <= st.t <= st.k - 1
    a, bb, c = st.wires
    assert st.seq[a][st.k - 1] == c
    assert st.seq[bb][st.t - 1] == a
    assert st.seq[c][st.r - 1] == a
    assert len(st.H) == st.k - st.r - 1
    assert set(st.regions) == set(range(1, 8)) - {a, bb, c}


def test_recursive_realization_n8():
    _, d = build_arrangement(4, enumerate_selfdual(4)[1])
    assert d.n > BASE_N
    arr = roundtrip(d)
    # exact rational output, one line per wire
    assert arr.n == 8


def test_base_case_all_im_classes_n5():
    from pseudoline.enumeration import enumerate_simple

    for d in enumerate_simple(5, filter="im", dedup=True):
        roundtrip(d)
