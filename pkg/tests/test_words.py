import pytest

from nilmassey import words
from nilmassey.errors import WordSyntaxError
from nilmassey.words import BracketAtom, GenAtom, GroupWord, WordAtom


def test_bracket_with_exponent():
    w = words.parse_word("[[x1,x2],x1]^8")
    assert len(w.terms) == 1
    atom, exp = w.terms[0]
    assert exp == 8
    assert isinstance(atom, BracketAtom)
    inner, outer_gen = atom.left, atom.right
    assert outer_gen == GroupWord(((GenAtom("x", 1), 1),))
    assert isinstance(inner.terms[0][0], BracketAtom)


def test_two_term_word():
    w = words.parse_word("x1 y1^-1")
    assert w.terms == ((GenAtom("x", 1), 1), (GenAtom("y", 1), -1))


def test_empty_word():
    assert words.parse_word("1") == GroupWord(())
    assert words.print_word(GroupWord(())) == "1"


def test_parenthesized_word():
    w = words.parse_word("(x1 y1)^2")
    atom, exp = w.terms[0]
    assert isinstance(atom, WordAtom) and exp == 2


def test_missing_exponent_offset():
    with pytest.raises(WordSyntaxError) as err:
        words.parse_word("x1^")
    assert err.value.offset == 3


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    ("z1", 0),
    ("x", 1),
    ("x0", 1),
    ("[x1", 3),
    ("[x1,", 4),
    ("[x1,y1", 6),
    ("x1 )", 3),
    ("(x1", 3),
    ("x1^ 3", 3),
])
def test_error_offsets(text, offset):
    with pytest.raises(WordSyntaxError) as err:
        words.parse_word(text)
    assert err.value.offset == offset


@pytest.mark.parametrize("text", [
    "x1",
    "y12^-3",
    "[x1,y1] [x2,y2]",
    "[[x1,x2],x2]^-8 y1",
    "(x1 [x2,y1]^4)^-2 y3",
    "1",
])
def test_round_trip(text):
    w = words.parse_word(text)
    assert words.parse_word(words.print_word(w)) == w


def test_whitespace_tolerance():
    assert words.parse_word("[ x1 , y1 ]") == words.parse_word("[x1,y1]")
    assert words.parse_word("  x1   y2 ") == words.parse_word("x1 y2")
