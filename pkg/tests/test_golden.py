import pytest

from apery_lab.golden import golden_cases

CASES = golden_cases()


@pytest.mark.parametrize("label,thunk,expected", CASES, ids=[c[0] for c in CASES])
def test_golden(label, thunk, expected):
    assert thunk() == expected
