import pytest
from hypothesis import given, strategies as st

from lexleast.words import (
    EMPTY,
    Ordering,
    Word,
    concat,
    count_letter,
    find,
    is_factor,
    is_palindrome,
    is_prefix,
    is_suffix,
    lex_compare,
    parse_word,
    remove_prefix,
    remove_suffix,
    render,
    reverse,
    rotate_left,
    rotate_right,
    word,
)

words = st.lists(st.integers(0, 12), max_size=20).map(Word)
nonempty = st.lists(st.integers(0, 12), min_size=1, max_size=20).map(Word)

PSI_0_2 = word("0010011001002")


def test_rotate_right_examples():
    assert rotate_right(word("001"), 1) == word("100")
    assert rotate_right(word("001"), 3) == word("001")
    assert rotate_right(PSI_0_2, 3) == word("0020010011001")


def test_rotate_empty_is_an_error():
    with pytest.raises(ValueError):
        rotate_right(EMPTY, 1)


def test_reverse_examples():
    assert reverse(word("001")) == word("100")
    assert reverse(EMPTY) == EMPTY
    assert reverse(PSI_0_2) == rotate_right(PSI_0_2, 1)


def test_lex_compare_examples():
    assert lex_compare(word("01"), word("02")) is Ordering.LESS
    assert lex_compare(word("01"), word("010")) is Ordering.X_PREFIX_OF_Y
    assert lex_compare(word("010"), word("01")) is Ordering.Y_PREFIX_OF_X
    assert lex_compare(word("0102012"), word("0102010")) is Ordering.GREATER
    assert lex_compare(word("0102"), word("0102")) is Ordering.EQUAL


def test_lex_compare_against_infinite_stream():
    from itertools import count
    assert lex_compare(word("0123"), count()) is Ordering.X_PREFIX_OF_Y
    assert lex_compare(word("013"), count()) is Ordering.GREATER


def test_count_letter_examples():
    assert count_letter(word("001"), 0) == 2
    assert count_letter(PSI_0_2, 1) == 4


def test_one_based_access():
    w = word("0102")
    assert w.at(1) == 0 and w.at(4) == 2
    with pytest.raises(IndexError):
        w.at(0)
    with pytest.raises(IndexError):
        w.at(5)


def test_prefix_suffix_factor_helpers():
    w = word("0010011")
    assert is_prefix(word("001"), w) and not is_prefix(word("01"), w)
    assert is_suffix(word("011"), w)
    assert remove_prefix(word("00"), w) == word("10011")
    assert remove_suffix(w, word("11")) == word("00100")
    assert find(w, word("01")) == 2
    assert find(w, word("01"), start=3) == 5
    assert find(w, word("22")) == 0
    assert is_factor(word("1001"), w)
    with pytest.raises(ValueError):
        remove_prefix(word("1"), w)


def test_render_and_parse():
    assert render(word("0102")) == "0102"
    assert render(Word((0, 10, 2))) == "0,10,2"
    assert parse_word("0,10,2") == Word((0, 10, 2))
    assert parse_word("") == EMPTY
    with pytest.raises(ValueError):
        parse_word("01a")


def test_word_operations_stay_words():
    w = word("01")
    assert isinstance(w + (2,), Word)
    assert isinstance((2,) + w, Word)
    assert isinstance(w * 2, Word)
    assert isinstance(w[1:], Word)
    assert concat(w, w, (3,)) == word("01013")


@given(nonempty, st.integers(-50, 50))
def test_rotation_is_mod_length(w, m):
    assert rotate_right(w, m) == rotate_right(w, m % len(w))
    assert rotate_left(rotate_right(w, m), m) == w


@given(nonempty)
def test_rotating_length_times_is_identity(w):
    v = w
    for _ in range(len(w)):
        v = rotate_right(v, 1)
    assert v == w


@given(words)
def test_reverse_is_involution(w):
    assert reverse(reverse(w)) == w
    assert len(reverse(w)) == len(w)
    assert is_palindrome(w + reverse(w))


@given(words)
def test_round_trip(w):
    assert Word(list(w)) == w
    assert parse_word(render(w)) == w


@given(words, words, words)
def test_lex_order_respects_extension(x, y, z):
    o = lex_compare(x, y)
    if o is Ordering.LESS:
        assert lex_compare(x + z, y) is Ordering.LESS
    if o is Ordering.X_PREFIX_OF_Y:
        assert lex_compare(y, x) is Ordering.Y_PREFIX_OF_X
    assert lex_compare(x, y).le or lex_compare(y, x).le
