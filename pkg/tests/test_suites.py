import pytest

from pseudoline.enumeration import raw_words
from pseudoline.suites import ALL_CHECKS, run_checks
from pseudoline.wiring import WiringDiagram, validate_wiring

SAMPLES = [
    validate_wiring(3, [1, 2, 1]),
    validate_wiring(4, [2, 1, 3, 2, 1, 3]),
    validate_wiring(5, [1, 2, 1, 3, 4, 3, 2, 1, 3, 2]),
    validate_wiring(6, [1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 2, 1, 2, 3, 4]),
    validate_wiring(6, [1, 2, 1, 3, 2, 1, 4, 3, 5, 4, 3, 2, 1, 3, 2]),
]


@pytest.mark.parametrize("d", SAMPLES, ids=lambda d: f"n{d.n}")
def test_all_checks_pass_on_samples(d):
    results = run_checks(d)
    assert set(results) == set(ALL_CHECKS)
    assert all(results.values()), results


def test_exhaustive_n5():
    for word in raw_words(5):
        results = run_checks(WiringDiagram(5, word))
        assert all(results.values()), (word, results)


def test_check_subset():
    out = run_checks(SAMPLES[0], names=["cell-formula", "counting"])
    assert set(out) == {"cell-formula", "counting"}
