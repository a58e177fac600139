import itertools

import pytest
from hypothesis import given, strategies as st

from kiselman.errors import LetterOutOfRangeError, RankMismatchError, WordParseError
from kiselman.words import (
    MAX_RANK,
    Word,
    content,
    delete_letter,
    is_canonical,
    length_bound,
    letter_multiplicity_bounds,
    multiplicity,
    parse_content,
    parse_word,
    sharpness_word,
)
from oracles import canonical_words_up_to, reducible_anywhere


def W(*letters, n=3):
    return Word(tuple(letters), n)


@pytest.mark.parametrize("letters,expected", [((), set()), ((1,), {1}), ((1, 2, 1), {1, 2})])
def test_content(letters, expected):
    assert content(W(*letters)) == frozenset(expected)


@pytest.mark.parametrize("letters,expected", [((), True), ((2, 1, 3, 2), True), ((2, 3, 2), False)])
def test_is_canonical_examples(letters, expected):
    assert is_canonical(W(*letters)) is expected
    assert is_canonical(W(*letters)) is not reducible_anywhere(letters)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_is_canonical_matches_brute_force(n):
    for k in range(6):
        for w in itertools.product(range(1, n + 1), repeat=k):
            assert is_canonical(w) is not reducible_anywhere(w), w


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 6), (5, 10), (6, 14), (7, 22)])
def test_length_bound(n, expected):
    assert length_bound(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_length_bound_is_longest_canonical_word(n):
    words = canonical_words_up_to(n, length_bound(n) + 1)
    assert max(map(len, words)) == length_bound(n)


@pytest.mark.parametrize("n,expected", [(1, [1]), (3, [1, 2, 1]), (4, [1, 2, 2, 1])])
def test_letter_multiplicity_bounds(n, expected):
    assert letter_multiplicity_bounds(n) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_multiplicity_bounds_sum_to_length_bound(n):
    assert sum(letter_multiplicity_bounds(n)) == length_bound(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_multiplicity_bounds_hold_on_canonical_words(n):
    bounds = letter_multiplicity_bounds(n)
    for w in canonical_words_up_to(n, length_bound(n)):
        assert all(multiplicity(w, i) <= bounds[i - 1] for i in range(1, n + 1))


@pytest.mark.parametrize("letters,i,expected", [
    ((1, 2, 1), 1, (2,)),
    ((1, 2, 1), 3, (1, 2, 1)),
    ((2, 1, 3, 2), 2, (1, 3)),
])
def test_delete_letter(letters, i, expected):
    assert delete_letter(W(*letters), i).letters == expected


@pytest.mark.parametrize("n,expected", [(1, (1,)), (2, (1, 2)), (3, (2, 1, 3, 2))])
def test_sharpness_word_examples(n, expected):
    assert sharpness_word(n).letters == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_sharpness_word_attains_bound(n):
    w = sharpness_word(n)
    assert is_canonical(w) and len(w) == length_bound(n)
    assert content(w) == frozenset(range(1, n + 1))


def test_parse_word_forms():
    assert parse_word("3,2,1,3", 3).letters == (3, 2, 1, 3)
    assert parse_word("3213", 3).letters == (3, 2, 1, 3)
    assert parse_word(" ", 3).letters == ()
    assert parse_word("10,2", 10).letters == (10, 2)
    assert parse_word("7", 10).letters == (7,)


@pytest.mark.parametrize("text,n", [("12", 10), ("1,x", 3), ("4", 3), ("0", 3), ("1;2", 3)])
def test_parse_word_errors(text, n):
    with pytest.raises(WordParseError):
        parse_word(text, n)


def test_parse_content():
    assert parse_content("1,3", 3) == frozenset({1, 3})
    assert parse_content("", 3) == frozenset()
    with pytest.raises(WordParseError):
        parse_content("4", 3)


def test_word_validation():
    with pytest.raises(LetterOutOfRangeError):
        Word((4,), 3)
    with pytest.raises(ValueError):
        Word((), 0)
    with pytest.raises(ValueError):
        Word((), MAX_RANK + 1)
    with pytest.raises(RankMismatchError):
        W(1, n=2) + W(1, n=3)
    assert (W(1) + W(2)).letters == (1, 2)
    assert str(W(1, 2)) == "1,2"


@given(st.lists(st.integers(1, 5), max_size=12))
def test_canonical_predicate_property(letters):
    assert is_canonical(tuple(letters)) is not reducible_anywhere(tuple(letters))
