import pytest

from lexleast.avoidance import generate_lexleast
from lexleast.morphisms import apply, iterate
from lexleast.patterns import SQUARE
from lexleast.ruler import first_occurrence, gamma, rho, w2_letter, w2_prefix, w2_stream
from lexleast.words import EMPTY, word
from oracles import all_words, nu2


def test_gamma_rho_images():
    assert gamma().image(0) == word("01")
    assert gamma().image(9) == (0, 10)
    assert rho().image(0) == EMPTY
    assert rho().image(5) == (4,)


def test_rho_is_left_inverse_of_gamma():
    for w in all_words(6, 5):
        assert apply(rho(), apply(gamma(), w)) == w
    assert apply(rho(), apply(gamma(), word("54321054"))) == word("54321054")


def test_w2_letter_examples():
    assert w2_letter(6) == 1
    assert w2_letter(2**10) == 10
    assert w2_letter(12) == 2
    assert w2_letter(3 * 2**200) == 200
    with pytest.raises(ValueError):
        w2_letter(0)


def test_w2_prefix_examples():
    assert str(w2_prefix(32)) == "01020103010201040102010301020105"
    assert w2_prefix(1) == word("0")
    assert w2_prefix(0) == EMPTY
    prefix = w2_prefix(1000)
    assert all(prefix.at(i) == nu2(i) == w2_letter(i) for i in range(1, 1001))


def test_gamma_power_lengths_and_ends():
    for i in range(13):
        for j in range(5):
            w = iterate(gamma(), i, j)
            assert len(w) == 2**i
            if i >= 1:
                assert w[0] == 0 and w[-1] == i + j


def test_first_occurrence():
    prefix = w2_prefix(2**14)
    for j in range(15):
        assert prefix.index(j) + 1 == 2**j == first_occurrence(j)


def test_dyadic_letter_counts():
    # letter j occurs exactly 2^(m-j-1) times among the first 2^m letters, j < m
    prefix = w2_prefix(2**14)
    for m in range(1, 15):
        block = prefix[: 2**m]
        for j in range(m):
            assert block.count(j) == 2 ** (m - j - 1)


def test_greedy_is_the_ruler_sequence():
    n = 2**14
    assert generate_lexleast(SQUARE, n) == w2_prefix(n)
    assert w2_stream().take(n) == w2_prefix(n)
