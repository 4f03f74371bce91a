"""Group-word grammar: parsing, printing, and the word AST.

Grammar (exact):

    word    := term { whitespace term } | "1"
    term    := atom [ "^" signed-integer ]
    atom    := generator | "[" word "," word "]" | "(" word ")"
    generator := ("x" | "y") positive-integer

Words are sequences of (atom, exponent) pairs; atoms are generators,
commutator brackets of sub-words, or parenthesized sub-words. Parsing
reports the byte offset of the first failure. parse_word(print_word(w))
returns w.
"""

from dataclasses import dataclass

from .errors import WordSyntaxError


@dataclass(frozen=True)
class GenAtom:
    kind: str  # "x" or "y"
    index: int  # 1-based

    @property
    def name(self):
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class BracketAtom:
    left: "GroupWord"
    right: "GroupWord"


@dataclass(frozen=True)
class WordAtom:
    word: "GroupWord"


@dataclass(frozen=True)
class GroupWord:
    terms: tuple  # tuple of (atom, exponent)


def gen_word(kind, index, exponent=1):
    return GroupWord(((GenAtom(kind, index), exponent),))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise WordSyntaxError(message, self.pos)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_word(self, stop=""):
        self.skip_ws()
        if self.peek() == "1":
            self.pos += 1
            self.skip_ws()
            if self.peek() and self.peek() not in stop:
                self.error("unexpected text after empty word '1'")
            return GroupWord(())
        terms = []
        while True:
            self.skip_ws()
            c = self.peek()
            if not c or c in stop:
                break
            terms.append(self.parse_term())
        if not terms:
            self.error("expected a word")
        return GroupWord(tuple(terms))

    def parse_term(self):
        atom = self.parse_atom()
        exponent = 1
        if self.peek() == "^":
            self.pos += 1
            exponent = self.parse_signed_integer()
        return (atom, exponent)

    def parse_atom(self):
        c = self.peek()
        if c == "[":
            self.pos += 1
            left = self.parse_word(stop=",")
            self.expect(",")
            right = self.parse_word(stop="]")
            self.expect("]")
            return BracketAtom(left, right)
        if c == "(":
            self.pos += 1
            inner = self.parse_word(stop=")")
            self.expect(")")
            return WordAtom(inner)
        if c in ("x", "y"):
            self.pos += 1
            index = self.parse_positive_integer()
            return GenAtom(c, index)
        self.error("expected a generator, '[' or '('")

    def parse_positive_integer(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a positive integer")
        value = int(self.text[start:self.pos])
        if value == 0:
            self.pos = start
            self.error("generator index must be positive")
        return value

    def parse_signed_integer(self):
        start = self.pos
        if self.peek() and self.peek() in "+-":
            self.pos += 1
        digits_start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if digits_start == self.pos:
            self.error("expected an integer after '^'")
        return int(self.text[start:self.pos])


def parse_word(text: str) -> GroupWord:
    parser = _Parser(text)
    word = parser.parse_word()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing text")
    return word


def _print_atom(atom) -> str:
    if isinstance(atom, GenAtom):
        return atom.name
    if isinstance(atom, BracketAtom):
        return f"[{print_word(atom.left)},{print_word(atom.right)}]"
    if isinstance(atom, WordAtom):
        return f"({print_word(atom.word)})"
    raise TypeError(f"not a word atom: {atom!r}")


def print_word(word: GroupWord) -> str:
    if not word.terms:
        return "1"
    parts = []
    for atom, exponent in word.terms:
        text = _print_atom(atom)
        if exponent != 1:
            text += f"^{exponent}"
        parts.append(text)
    return " ".join(parts)
