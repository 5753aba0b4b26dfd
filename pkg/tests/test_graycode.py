import pytest
from fractions import Fraction

from qbalance.core import format_word, parse_word
from qbalance.errors import IndexOutOfRange, ParameterError, SizeGuardExceeded
from qbalance.formatter import format_gray_table, format_walk_csv
from qbalance.graycode import (
    from_digits,
    gray_decode,
    gray_encode,
    gray_rank_to_word,
    gray_table,
    gray_walk,
    gray_word_to_rank,
    to_digits,
)

CONFIGS = [
    (q, r_prime)
    for q in (2, 3, 4, 5)
    for r_prime in range(1, 14)
    if q**r_prime <= 10**4
]


def test_table_matches_reference_listing(fixture_text):
    assert format_gray_table(gray_table(3, 3)) == fixture_text("gray_3_3.tsv")


def test_walk_weights_for_two_symbol_prefixes():
    assert gray_walk(3, 2).weights == [0, 1, 2, 3, 2, 1, 2, 3, 4]
    assert gray_walk(3, 2).beta == Fraction(2)


@pytest.mark.parametrize("q, r_prime", CONFIGS)
def test_gray_code_invariants(q, r_prime):
    words = list(gray_table(q, r_prime))
    assert len({w.g for w in words}) == q**r_prime

    for z_prime, word in enumerate(words):
        assert word.z_prime == z_prime
        assert gray_word_to_rank(word.g) == z_prime
        assert gray_decode(word.g) == word.d

    for a, b in zip(words, words[1:]):
        changed = [i for i in range(r_prime) if a.g[i] != b.g[i]]
        assert len(changed) == 1
        assert abs(a.weight - b.weight) == 1

    if q % 2:
        last = q**r_prime - 1
        for word in words:
            mirror = words[last - word.z_prime]
            assert mirror.g.symbols == tuple(q - 1 - s for s in word.g.symbols)
            assert word.weight + mirror.weight == r_prime * (q - 1)


def test_encode_and_decode_example_words():
    assert format_word(gray_encode(parse_word("122", 3))) == "100"
    assert format_word(gray_decode(parse_word("100", 3))) == "122"
    assert format_word(gray_encode(parse_word("10", 3))) == "12"
    assert gray_word_to_rank(parse_word("12", 3)) == 3


def test_digits_are_most_significant_first():
    assert to_digits(17, 3, 3) == (1, 2, 2)
    assert from_digits((1, 2, 2), 3) == 17
    assert to_digits(0, 4, 2) == (0, 0)


@pytest.mark.parametrize("z_prime", [-1, 27])
def test_rank_out_of_range(z_prime):
    with pytest.raises(IndexOutOfRange):
        gray_rank_to_word(3, 3, z_prime)


def test_invalid_code_parameters():
    with pytest.raises(ParameterError):
        gray_rank_to_word(1, 3, 0)
    with pytest.raises(ParameterError):
        gray_rank_to_word(3, 0, 0)


@pytest.mark.parametrize("q, r_prime", [(1, 3), (0, 2), (3, 0), (2, -1)])
def test_enumeration_rejects_invalid_code_parameters(q, r_prime):
    with pytest.raises(ParameterError):
        gray_walk(q, r_prime)
    with pytest.raises(ParameterError):
        list(gray_table(q, r_prime))


def test_enumeration_is_guarded():
    with pytest.raises(SizeGuardExceeded):
        gray_walk(3, 5, guard=200)
    with pytest.raises(SizeGuardExceeded):
        list(gray_table(4, 6, guard=1000))


def test_large_alphabet_round_trip():
    word = gray_rank_to_word(16, 3, 3000)
    assert gray_word_to_rank(word.g) == 3000
    assert "," in format_word(word.g)


def test_walk_csv_header():
    lines = format_walk_csv(gray_walk(3, 3)).splitlines()
    assert lines[0] == "z,weight"
    assert lines[1:4] == ["0,0", "1,1", "2,2"]
    assert lines[-1] == "26,6"


@pytest.mark.parametrize("q", [2, 3, 4, 7])
def test_single_symbol_code_is_identity(q):
    assert gray_walk(q, 1).weights == list(range(q))


def test_four_ary_two_symbol_code():
    assert format_word(gray_rank_to_word(4, 2, 12).g) == "33"
    weights = gray_walk(4, 2).weights
    assert sum(weights[1:13]) == 3 * 12
