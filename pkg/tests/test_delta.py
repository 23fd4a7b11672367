import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hyperramsey.delta import (BitVertex, DeltaClass, DeltaProfile, bit_compare, classify,
                               delta, delta_int, delta_sequence, delta_sequence_ints,
                               local_extrema, sorted_tuples, universe)
from hyperramsey.errors import DomainError


def B(s):
    return BitVertex.parse(s)


def naive_delta(a: str, b: str) -> int:
    for i, (x, y) in enumerate(zip(a, b), start=1):
        if x != y:
            return i
    raise AssertionError("equal strings")


def test_footnote_example():
    a, b = B("10110"), B("10011")
    assert bit_compare(a, b) == 1
    assert a > b
    assert delta(a, b) == 3


def test_compare_and_delta_basics():
    assert bit_compare(B("01"), B("10")) == -1
    assert bit_compare(B("101"), B("101")) == 0
    assert delta(B("011"), B("100")) == 1
    with pytest.raises(DomainError):
        delta(B("011"), B("011"))
    with pytest.raises(DomainError):
        bit_compare(B("01"), B("011"))
    with pytest.raises(DomainError):
        delta(B("01"), B("011"))


def test_bitvertex_roundtrip():
    for v in universe(4):
        assert BitVertex.from_int(int(v), 4) == v
        assert BitVertex.parse(str(v)) == v
    assert [int(v) for v in universe(3)] == list(range(8))


def test_delta_sequence_examples():
    assert delta_sequence([B("00"), B("01"), B("10")]) == (2, 1)
    assert delta_sequence([B("000"), B("111")]) == (1,)
    with pytest.raises(DomainError):
        delta_sequence([B("01"), B("00")])
    with pytest.raises(DomainError):
        delta_sequence([B("01"), B("01")])


def test_classify_examples():
    assert classify((5, 2, 4, 1, 3), 6) is DeltaClass.ZIGZAG
    assert classify((7, 1, 6, 3, 5, 2), 7) is DeltaClass.STRONG_ZIGZAG
    assert classify((7, 1, 6, 2, 5, 3), 7) is DeltaClass.ZIGZAG
    assert classify((1, 2, 3, 4, 5), 6) is DeltaClass.INCREASING
    assert classify((5, 4, 3, 2, 1), 6) is DeltaClass.DECREASING
    assert classify((1, 3, 2, 4, 5), 6) is DeltaClass.OTHER
    # monotone wins when the shapes coincide (k = 3)
    assert classify((3, 1), 3) is DeltaClass.DECREASING
    with pytest.raises(DomainError):
        classify((1, 1, 2), 4)
    with pytest.raises(DomainError):
        classify((1, 2), 4)


def test_even_k_never_strong():
    assert classify((7, 1, 6, 3, 5), 6) is DeltaClass.ZIGZAG


@given(st.lists(st.integers(1, 8), min_size=2, max_size=8))
def test_classes_are_exclusive(d):
    if any(x == y for x, y in zip(d, d[1:])):
        with pytest.raises(DomainError):
            classify(d)
        return
    c = classify(d)
    inc = all(x < y for x, y in zip(d, d[1:]))
    dec = all(x > y for x, y in zip(d, d[1:]))
    assert c.monotone == (inc or dec)
    if not c.monotone and c.zigzag:
        assert all((d[i] > d[i + 1]) == (i % 2 == 0) for i in range(len(d) - 1))


def test_profile_and_extrema():
    S = [B(s) for s in ("000", "001", "010", "100")]
    p = DeltaProfile.of(S)
    assert p.deltas == (3, 2, 1) and p.cls is DeltaClass.DECREASING
    assert local_extrema((1, 3, 2, 4)) == [(2, "max"), (3, "min")]


def test_sorted_tuples_count():
    assert sum(1 for _ in sorted_tuples(3, 3)) == 56


# -- properties A and B, exhaustive at N <= 4 ------------------------------------

@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_property_A_exhaustive(N):
    for a, b, c in itertools.combinations(range(1 << N), 3):
        assert delta_int(a, b, N) != delta_int(b, c, N)


@pytest.mark.parametrize("r", range(2, 7))
def test_property_B_exhaustive_N4(r):
    for S in itertools.combinations(range(16), r):
        d = delta_sequence_ints(S, 4)
        for i, j in itertools.combinations(range(r), 2):
            assert delta_int(S[i], S[j], 4) == min(d[i:j])


@settings(max_examples=300)
@given(st.lists(st.integers(0, (1 << 16) - 1), min_size=3, max_size=12, unique=True))
def test_property_B_random_N16(values):
    S = sorted(values)
    d = delta_sequence_ints(S, 16)
    assert delta_int(S[0], S[-1], 16) == min(d)
    assert all(x != y for x, y in zip(d, d[1:]))


@settings(max_examples=300)
@given(st.lists(st.integers(0, 31), min_size=2, max_size=8, unique=True))
def test_fast_delta_matches_string_scan(values):
    S = [BitVertex.from_int(v, 5) for v in sorted(values)]
    assert delta_sequence(S) == tuple(naive_delta(str(a), str(b)) for a, b in zip(S, S[1:]))


@settings(max_examples=300)
@given(st.lists(st.integers(0, 255), min_size=4, max_size=10, unique=True))
def test_fact_no_repeat_after_rise(values):
    d = delta_sequence_ints(sorted(values), 8)
    for i in range(len(d) - 2):
        if d[i + 1] > d[i]:
            assert d[i] != d[i + 2]
