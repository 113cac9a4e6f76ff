from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

import brute
from wordperiods import InvalidArgument, Word
from wordperiods.words import (
    border_lengths,
    canonical,
    coincide_except_one,
    failure_function,
    has_period,
    min_period,
    period_mask,
    periods,
    periods_by_borders,
    periods_by_scan,
    reverse,
)

words_st = st.integers(1, 4).flatmap(
    lambda k: st.lists(st.integers(0, k - 1), max_size=40).map(lambda xs: Word(tuple(xs), k))
)


@pytest.mark.parametrize(
    "text, p, expected",
    [("ababab", 2, True), ("ababab", 0, True), ("abaaab", 3, False), ("ababab", 6, True), ("abaaab", 4, True)],
)
def test_has_period(W, text, p, expected):
    assert has_period(W(text), p) is expected


@pytest.mark.parametrize("p", [-1, 7])
def test_has_period_out_of_range(W, p):
    with pytest.raises(InvalidArgument):
        has_period(W("ababab"), p)


@pytest.mark.parametrize(
    "text, expected",
    [("ababab", (0, 2, 4, 6)), ("aaaa", (0, 1, 2, 3, 4)), ("abaaab", (0, 4, 6)), ("", (0,))],
)
def test_periods(W, text, expected):
    assert periods(W(text)).members == expected
    assert periods_by_scan(W(text)).members == expected


@pytest.mark.parametrize(
    "text, expected",
    [("ababab", (0, 2, 4)), ("aaaa", (0, 1, 2, 3)), ("abaaab", (0, 2)), ("", ())],
)
def test_border_lengths(W, text, expected):
    assert border_lengths(W(text)) == expected


def test_failure_function_textbook():
    # prefix function of "aabaaab"
    assert failure_function([0, 0, 1, 0, 0, 0, 1]) == [0, 1, 0, 1, 2, 2, 3]


def test_coincide_except_one(W):
    assert coincide_except_one(W("ababab"), W("abaaab")) == ("single-mismatch", 4)
    assert coincide_except_one(W("ababab"), W("ababab")).kind == "equal"
    assert coincide_except_one(W("ababab"), W("abaaba")).kind == "multiple-mismatch"
    with pytest.raises(InvalidArgument):
        coincide_except_one(W("ab"), W("aba"))


def test_reverse(W):
    assert str(reverse(W("abaaab"))) == "baaaba"
    assert len(reverse(W(""))) == 0
    r = reverse(W("ababab"))
    assert str(r) == "bababa"
    assert periods(r).members == (0, 2, 4, 6)


def test_parse_and_render(W):
    assert W("abc").alphabet_size == 3
    assert W("abc").letters == (0, 1, 2)
    assert str(W("ε")) == "ε" and len(W("ε")) == 0
    with pytest.raises(InvalidArgument):
        W("abz")
    with pytest.raises(InvalidArgument):
        Word((0, 2), 2)


def test_canonical():
    assert canonical((1, 1, 0), (1, 2, 0)) == ((0, 0, 1), (0, 2, 1))


def test_scan_and_borders_agree_binary_14():
    for n in range(15):
        for w in product((0, 1), repeat=n):
            assert periods_by_scan(w) == periods_by_borders(w)


def test_scan_and_borders_agree_ternary_9():
    for n in range(10):
        for w in product((0, 1, 2), repeat=n):
            assert periods_by_scan(w) == periods_by_borders(w)


@pytest.mark.parametrize("n", range(0, 9))
def test_against_string_oracle(n):
    for text in brute.words(n):
        w = Word.parse(text)
        assert list(periods(w).members) == brute.periods(text)
        assert list(border_lengths(w)) == brute.borders(text)
        if n:
            assert min_period(w) == brute.min_period(text)


@given(words_st)
def test_period_set_invariants(w):
    pi = periods(w)
    n = len(w)
    assert 0 in pi and n in pi
    assert pi.members == tuple(sorted({0} | {n - b for b in border_lengths(w)}))
    assert periods(reverse(w)) == pi
    assert period_mask(w) == pi.mask
    for p in pi.members:
        if p and 2 * p <= n:
            assert 2 * p in pi
    if n:
        assert min_period(w) == pi.members[1]


@given(words_st)
def test_render_round_trip(w):
    assert Word.parse(str(w), w.alphabet_size) == w
