import pytest

from pseudoline.analysis import is_in_Im
from pseudoline.enumeration import MAX_N, enumerate_simple, raw_words
from pseudoline.errors import NTooLarge
from pseudoline.sweep import census_sides
from pseudoline.wiring import WiringDiagram, validate_wiring


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 16), (5, 768)])
def test_raw_counts(n, count):
    assert sum(1 for _ in raw_words(n)) == count


def test_raw_words_are_valid_and_distinct():
    words = list(raw_words(4))
    assert len(set(words)) == len(words)
    for w in words:
        validate_wiring(4, w)
    assert words == sorted(words)  # lexicographic order


def test_prefix_partition():
    total = sum(sum(1 for _ in raw_words(5, prefix=(t,))) for t in range(1, 5))
    assert total == 768
    with pytest.raises(ValueError):
        next(raw_words(3, prefix=(1, 1)))


def test_filter_one_ge5():
    for d in enumerate_simple(5, filter="one-ge5"):
        sides = census_sides(5, d.swaps)
        assert sum(1 for s in sides if s >= 5) == 1


def test_filter_im():
    ims = list(enumerate_simple(5, filter="im"))
    assert ims and all(is_in_Im(d).member for d in ims)


def test_dedup_small():
    assert enumerate_simple(3, dedup=True).count() == 1
    assert enumerate_simple(4, dedup=True).count() == 1


def test_dedup_im_n5():
    # distinct Im classes on 5 wires
    assert enumerate_simple(5, filter="im", dedup=True).count() == 3


def test_caps():
    with pytest.raises(NTooLarge):
        enumerate_simple(0)
    with pytest.raises(NTooLarge):
        enumerate_simple(MAX_N + 1)
    with pytest.raises(ValueError):
        enumerate_simple(4, filter="nope")


def test_stream_fields():
    stream = enumerate_simple(4, filter="one-ge5", dedup=True)
    assert stream.n == 4 and stream.filter == "one-ge5" and stream.dedup
    assert stream.count() == 0  # no (>=5)-gon fits in 4 wires
