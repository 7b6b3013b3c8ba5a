import pytest
from hypothesis import given, strategies as st

from mfold.classes import EXCEPTIONAL, LINE, CurveClass, line_degree, pairing, split_range

ints = st.integers(-20, 20)
classes = st.builds(CurveClass, ints, ints)


@pytest.mark.parametrize(
    "a1, a2, expected",
    [((1, 0), (1, 0), 1), ((1, 0), (1, 1), 1), ((3, 2), (2, 1), 4)],
)
def test_pairing_examples(a1, a2, expected):
    assert pairing(a1, a2) == expected


@pytest.mark.parametrize("a, expected", [((5, 4), 5), ((0, -1), 0), ((1, 1), 1)])
def test_line_degree(a, expected):
    assert line_degree(a) == expected
    assert line_degree(a) == pairing(a, LINE)


def test_named_elements():
    assert LINE == (1, 0)
    assert EXCEPTIONAL == (0, -1)
    assert pairing(EXCEPTIONAL, EXCEPTIONAL) == -1


@given(classes, classes, classes, ints)
def test_pairing_symmetric_bilinear(a, b, c, k):
    assert pairing(a, b) == pairing(b, a)
    assert pairing(a + b, c) == pairing(a, c) + pairing(b, c)
    assert pairing(CurveClass(k * a.d, k * a.m), b) == k * pairing(a, b)


def test_split_examples():
    s21 = list(split_range((2, 1)))
    assert ((1, 0), (1, 1)) in s21 and ((1, 1), (1, 0)) in s21
    s10 = list(split_range((1, 0)))
    assert ((1, 1), (0, -1)) in s10
    assert ((1, 0), (0, 0)) not in s10
    assert all(a1 + a2 == (3, 2) for a1, a2 in split_range((3, 2)))


@given(st.integers(0, 8), st.integers(-1, 9))
def test_split_window_properties(d, m):
    if (d, m) == (0, 0):
        return
    splits = list(split_range((d, m)))
    assert len(splits) == len(set(splits))
    assert splits == list(split_range((d, m)))
    for a1, a2 in splits:
        assert a1 + a2 == (d, m)
        assert not a1.is_zero() and not a2.is_zero()
        assert 0 <= a1.d <= d and -1 <= a1.m <= m + 1


def test_split_rejects_zero_class():
    with pytest.raises(ValueError):
        list(split_range((0, 0)))
