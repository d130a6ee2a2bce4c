"""Tokens shared by the expression parser and the rule file parser."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from ..errors import ExprSyntaxError


class TokenKind(Enum):
    INT = "integer"
    IDENT = "identifier"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    SLASH = "'/'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"
    LBRACK = "'['"
    RBRACK = "']'"
    COMMA = "','"
    EQUALS = "'='"
    DOTDOT = "'..'"
    ARROW = "'->'"
    EOF = "end of input"


_PUNCTUATION = {
    "+": TokenKind.PLUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "[": TokenKind.LBRACK,
    "]": TokenKind.RBRACK,
    ",": TokenKind.COMMA,
    "=": TokenKind.EQUALS,
}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind is TokenKind.EOF:
            return self.kind.value
        return repr(self.text)


def tokenize(text: str) -> Iterator[Token]:
    """
    Split ``text`` into tokens, ending with a single EOF token.

    Identifiers are ASCII letters, digits and underscores starting with a
    letter or underscore; integers are ASCII digit runs. Whitespace separates
    tokens and is otherwise ignored. Line and column numbers start at 1.

    Raises:
        ExprSyntaxError: On any character outside the grammar, including a
            lone ``.`` (floating literals are not part of the language).
    """
    line, column = 1, 1
    i, size = 0, len(text)
    while i < size:
        ch = text[i]
        if ch == "\n":
            i += 1
            line, column = line + 1, 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            column += 1
            continue
        start_column = column
        if ch.isascii() and ch.isdigit():
            j = i
            while j < size and text[j].isascii() and text[j].isdigit():
                j += 1
            yield Token(TokenKind.INT, text[i:j], line, start_column)
        elif ch.isascii() and (ch.isalpha() or ch == "_"):
            j = i
            while j < size and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield Token(TokenKind.IDENT, text[i:j], line, start_column)
        elif text.startswith("->", i):
            j = i + 2
            yield Token(TokenKind.ARROW, "->", line, start_column)
        elif ch == "-":
            j = i + 1
            yield Token(TokenKind.MINUS, "-", line, start_column)
        elif text.startswith("..", i):
            j = i + 2
            yield Token(TokenKind.DOTDOT, "..", line, start_column)
        elif ch in _PUNCTUATION:
            j = i + 1
            yield Token(_PUNCTUATION[ch], ch, line, start_column)
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", line, start_column)
        column += j - i
        i = j
    yield Token(TokenKind.EOF, "", line, column)


class TokenStream:
    """A one-token-lookahead cursor over :func:`tokenize` output."""

    def __init__(self, text: str):
        self._tokens = list(tokenize(text))
        self._index = 0

    @property
    def current(self) -> Token:
        return self._tokens[self._index]

    def peek(self, offset: int = 1) -> Token:
        index = min(self._index + offset, len(self._tokens) - 1)
        return self._tokens[index]

    def at(self, *kinds: TokenKind) -> bool:
        return self.current.kind in kinds

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self._index += 1
        return token

    def accept(self, kind: TokenKind):
        if self.current.kind is kind:
            return self.advance()
        return None

    def expect(self, kind: TokenKind, what: str = None) -> Token:
        token = self.current
        if token.kind is not kind:
            raise self.error(f"expected {what or kind.value}, found {token.describe()}")
        return self.advance()

    def error(self, msg: str, token: Token = None) -> ExprSyntaxError:
        token = token or self.current
        return ExprSyntaxError(msg, token.line, token.column)
