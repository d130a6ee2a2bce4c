"""LL(1) recursive-descent parser for algebra expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | primary ('^' INT)*
    primary:= atom | INT ['/' INT] | '(' expr ')' | '[' expr ',' expr ']'
    atom   := ('D1' | 'D2' | 'E' | 'F' | 'Z') '^' INT
            | 'e_' INT | 'x_' INT | 'u' | 'v' | 'w'
"""

import re
import sys
from fractions import Fraction
from typing import Optional, Union

from ..constants import MAX_EXPONENT, MAX_NESTING_DEPTH
from ..errors import ExprSyntaxError, UnknownAtom
from .ast import (
    CENTRAL_ATOM,
    GENERATOR_ATOMS,
    PLAIN_ATOMS,
    Atom,
    Commutator,
    Expression,
    Neg,
    Number,
    Position,
    Power,
    Product,
    Sum,
)
from .tokens import Token, TokenKind, TokenStream

_INDEXED = re.compile(r"^(e|x)_([0-9]+)$")
_RECURSION_LIMIT = 8 * MAX_NESTING_DEPTH + 1000
_MAX_LITERAL_DIGITS = 1000


class Parser:
    """
    Parse one expression.

    Args:
        text (str): The source text.
        n (int, optional): Rank parameter; when given, E superscripts must
            exceed 2n - 2.
    """

    def __init__(self, text: str, n: Optional[int] = None):
        self.stream = TokenStream(text)
        self.n = n
        self.depth = 0

    @staticmethod
    def _position(token: Token) -> Position:
        return Position(token.line, token.column)

    def _enter(self, token: Token):
        self.depth += 1
        if self.depth > MAX_NESTING_DEPTH:
            raise self.stream.error(f"nesting deeper than {MAX_NESTING_DEPTH}", token)

    def _integer(self, token: Token, text: Optional[str] = None) -> int:
        digits = token.text if text is None else text
        if len(digits) > _MAX_LITERAL_DIGITS:
            raise self.stream.error("integer literal too long", token)
        try:
            return int(digits)
        except ValueError as exc:
            raise self.stream.error("integer literal too long", token) from exc

    def parse(self) -> Expression:
        expression = self.expr()
        if not self.stream.at(TokenKind.EOF):
            raise self.stream.error(f"unexpected {self.stream.current.describe()}")
        return expression

    def expr(self) -> Expression:
        start = self.stream.current
        terms = [self.term()]
        while self.stream.at(TokenKind.PLUS, TokenKind.MINUS):
            op = self.stream.advance()
            term = self.term()
            terms.append(Neg(term, self._position(op)) if op.kind is TokenKind.MINUS else term)
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), self._position(start))

    def term(self) -> Expression:
        start = self.stream.current
        factors = [self.factor()]
        while self.stream.accept(TokenKind.STAR):
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), self._position(start))

    def factor(self) -> Expression:
        token = self.stream.current
        if self.stream.accept(TokenKind.MINUS):
            self._enter(token)
            operand = self.factor()
            self.depth -= 1
            return Neg(operand, self._position(token))
        result = self.primary()
        while self.stream.accept(TokenKind.CARET):
            exponent = self.stream.expect(TokenKind.INT, "an integer exponent")
            value = self._integer(exponent)
            if value > MAX_EXPONENT:
                raise self.stream.error(f"exponent exceeds {MAX_EXPONENT}", exponent)
            result = Power(result, value, self._position(token))
        return result

    def primary(self) -> Expression:
        token = self.stream.current
        if token.kind is TokenKind.INT:
            return self.number()
        if token.kind is TokenKind.IDENT:
            return self.atom()
        if token.kind is TokenKind.LPAREN:
            self.stream.advance()
            self._enter(token)
            inner = self.expr()
            self.stream.expect(TokenKind.RPAREN)
            self.depth -= 1
            return inner
        if token.kind is TokenKind.LBRACK:
            self.stream.advance()
            self._enter(token)
            left = self.expr()
            self.stream.expect(TokenKind.COMMA)
            right = self.expr()
            self.stream.expect(TokenKind.RBRACK)
            self.depth -= 1
            return Commutator(left, right, self._position(token))
        raise self.stream.error(f"expected an operand, found {token.describe()}")

    def number(self) -> Number:
        token = self.stream.advance()
        value = Fraction(self._integer(token))
        if self.stream.accept(TokenKind.SLASH):
            denominator_token = self.stream.expect(TokenKind.INT, "a denominator")
            denominator = self._integer(denominator_token)
            if denominator == 0:
                raise self.stream.error("zero denominator", denominator_token)
            value /= denominator
        return Number(value, self._position(token))

    def atom(self) -> Atom:
        token = self.stream.advance()
        name, position = token.text, self._position(token)
        if name in GENERATOR_ATOMS or name == CENTRAL_ATOM:
            self.stream.expect(TokenKind.CARET, f"'^' after {name}")
            index_token = self.stream.expect(TokenKind.INT, f"a superscript for {name}")
            index = self._integer(index_token)
            self._check_superscript(name, index, token)
            return Atom(name, index, position)
        match = _INDEXED.match(name)
        if match:
            index = self._integer(token, match.group(2))
            if match.group(1) == "x" and index < 1:
                raise self.stream.error("variable index must be at least 1", token)
            return Atom(match.group(1), index, position)
        if name in PLAIN_ATOMS:
            return Atom(name, None, position)
        raise UnknownAtom(f"unknown atom {name!r}", token.line, token.column)

    def _check_superscript(self, name: str, index: int, token: Token):
        if name == CENTRAL_ATOM:
            return
        if name == "E" and self.n is not None:
            shift = 2 * self.n - 2
            if index <= shift:
                raise self.stream.error(
                    f"E superscript must exceed 2n-2 = {shift}, got E^{index}", token
                )
        if index < 1:
            raise self.stream.error(f"{name} superscript must be at least 1", token)


def parse(text: Union[str, bytes], n: Optional[int] = None) -> Expression:
    """
    Parse ``text`` into an expression tree.

    Args:
        text (str | bytes): The source; bytes must be UTF-8.
        n (int, optional): Rank parameter used to check E superscripts.

    Raises:
        ExprSyntaxError: On any syntax error, with line and column.
        UnknownAtom: On an identifier that names no atom.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ExprSyntaxError("input is not valid UTF-8", 1, exc.start + 1) from exc
    # Each nesting level costs a handful of interpreter frames.
    if sys.getrecursionlimit() < _RECURSION_LIMIT:
        sys.setrecursionlimit(_RECURSION_LIMIT)
    return Parser(text, n).parse()
