"""
Recursive-descent parser for the network language.

    element := "spring"   "(" "mu"  "=" number ")"
             | "dashpot"  "(" "eta" "=" number ")"
             | "series"   "(" element ("," element)+ ")"
             | "parallel" "(" element ("," element)+ ")"

Whitespace is ignored. Errors report the character offset of the
offending token.
"""
import re
from dataclasses import dataclass
from typing import List

from exceptions import NetworkSyntaxError
from .network_expr import NetworkExpr, Spring, Dashpot, Series, Parallel

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[(),=])
""", re.VERBOSE)

ELEMENT_KEYWORDS = ("spring", "dashpot", "series", "parallel")
_LEAF_PARAMETER = {"spring": "mu", "dashpot": "eta"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else repr(self.text)


def tokenize(text: str) -> List[Token]:
    """
    Split ``text`` into tokens, ending with an ``end`` token.

    Raises:
        NetworkSyntaxError: On a character that starts no token
    """
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise NetworkSyntaxError(pos, "a keyword, number or one of ( ) , =", text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind if kind != "punct" else m.group(), m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class NetworkParser:
    """Parser over one input text; use ``parse`` for one-shot calls."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _fail(self, expected: str) -> NetworkSyntaxError:
        return NetworkSyntaxError(self.current.pos, f"{expected}, found {self.current.describe()}", self.text)

    def _expect(self, kind: str, expected: str) -> Token:
        token = self.current
        if token.kind != kind:
            raise self._fail(expected)
        self.index += 1
        return token

    def parse(self) -> NetworkExpr:
        """
        Parse the whole input.

        Returns:
            NetworkExpr: Syntax tree mirroring the text

        Raises:
            NetworkSyntaxError: On malformed text
            NonPositiveParameterError: On a zero or negative parameter
        """
        expr = self._element()
        self._expect("end", "end of input")
        return expr

    def _element(self) -> NetworkExpr:
        token = self.current
        if token.kind != "name" or token.text not in ELEMENT_KEYWORDS:
            raise self._fail("spring, dashpot, series or parallel")
        self.index += 1
        self._expect("(", "'('")
        if token.text in _LEAF_PARAMETER:
            expr = self._leaf(token.text)
        else:
            expr = self._composite(token.text)
        self._expect(")", "')'")
        return expr

    def _leaf(self, keyword: str) -> NetworkExpr:
        parameter = _LEAF_PARAMETER[keyword]
        name = self.current
        if name.kind != "name" or name.text != parameter:
            raise self._fail(f"'{parameter}'")
        self.index += 1
        self._expect("=", "'='")
        value = float(self._expect("number", "a number").text)
        return Spring(value) if keyword == "spring" else Dashpot(value)

    def _composite(self, keyword: str) -> NetworkExpr:
        children = [self._element()]
        if self.current.kind != ",":
            raise self._fail(f"',' ({keyword} needs at least two children)")
        while self.current.kind == ",":
            self.index += 1
            children.append(self._element())
        if keyword == "series":
            return Series(tuple(children))
        return Parallel(tuple(children))


def parse(text: str) -> NetworkExpr:
    """Parse network text into a syntax tree."""
    return NetworkParser(text).parse()
