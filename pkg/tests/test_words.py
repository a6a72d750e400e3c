import pytest
from hypothesis import given

from conftest import braid_words, free_words, gen_words
from modular_braid.errors import ParseError
from modular_braid.words import BraidWord, FreeWord, GenWord, reduced_free_words


def test_parse_and_print():
    w = GenWord.parse("A^-3 B A^2")
    assert w.letters == (("A", -3), ("B", 1), ("A", 2))
    assert str(w) == "A^-3 B A^2"
    assert len(w) == 6
    assert w.exponent_sum() == 0


def test_empty_word_is_identity():
    assert GenWord.parse("").is_identity()
    assert GenWord.parse("   ") == GenWord.identity()
    assert str(GenWord.identity()) == ""


def test_adjacent_syllables_merge_and_cancel():
    assert GenWord.parse("A A^2 B B^-1 A^-3") == GenWord.identity()
    assert GenWord.parse("A B B A") == GenWord([("A", 1), ("B", 2), ("A", 1)])
    assert GenWord.parse("A^0 B") == GenWord.parse("B")


def test_multiplication_cancels_across_the_junction():
    u = FreeWord.parse("g1 g2 g1^2")
    v = FreeWord.parse("g1^-2 g2^-1 g1")
    assert u * v == FreeWord.parse("g1^2")
    assert u * u.inverse() == FreeWord.identity()


def test_power():
    w = GenWord.parse("A B")
    assert w ** 3 == GenWord.parse("A B A B A B")
    assert w ** -1 == GenWord.parse("B^-1 A^-1")
    assert w ** 0 == GenWord.identity()


@pytest.mark.parametrize("text, token, pos", [
    ("A C", "C", 1),
    ("A^x", "A^x", 0),
    ("B A^", "A^", 1),
    ("a", "a", 0),
])
def test_parse_errors_locate_token(text, token, pos):
    with pytest.raises(ParseError) as exc:
        GenWord.parse(text)
    assert exc.value.token == token
    assert exc.value.position == pos


def test_alphabets_are_separate():
    with pytest.raises(ParseError):
        BraidWord.parse("A")
    with pytest.raises(ParseError):
        FreeWord.parse("g3")
    assert str(BraidWord.parse("a b^-1 a^2")) == "a b^-1 a^2"


def test_json_form():
    w = GenWord.parse("A^-3 B")
    assert w.to_json() == {"word": [["A", -3], ["B", 1]]}
    assert GenWord.from_json('{"word": [["A", -3], ["B", 1]]}') == w
    assert BraidWord.from_json({"word": [["a", 2]]}) == BraidWord.parse("a^2")
    for bad in ('{"word": [["C", 1]]}', '{"w": []}', '{"word": [["A", 1.5]]}', "not json"):
        with pytest.raises(ParseError):
            GenWord.from_json(bad)


@given(gen_words)
def test_text_round_trip(w):
    assert GenWord.parse(str(w)) == w
    assert GenWord.from_json(w.to_json()) == w


@given(braid_words, braid_words)
def test_inverse_of_product(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * v) * v.inverse() == u


@given(free_words)
def test_words_stay_reduced(w):
    for (g, e), (h, _) in zip(w.letters, w.letters[1:]):
        assert g != h
    assert all(e != 0 for _, e in w.letters)


def test_reduced_free_word_count():
    # 1 + 4 + 4*3 + ... + 4*3^(L-1)
    for L in range(6):
        words = list(reduced_free_words(L))
        assert len(words) == 1 + 2 * (3 ** L - 1)
        assert len(set(words)) == len(words)
        assert max(len(w) for w in words) == L
