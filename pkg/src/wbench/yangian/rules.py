"""Rule file parsing and the relation table of Y_2(sigma).

The defining relations are data: a line-oriented rule file whose superscripts
are affine expressions in the symbols ``r``, ``s`` and ``t``. Each line is
compiled to a :class:`RuleTemplate`; a :class:`RelationTable` instantiates the
templates for concrete generator pairs, solving the E-E and F-F difference
relations recursively and memoizing every commutator it produces.
"""

import logging
import threading
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from ..constants import RULE_FILE_FORMAT_VERSION
from ..errors import ExprSyntaxError, InadmissibleGenerator, RuleTableError
from ..exactalg import Alphabet, Family, Generator, NCMonomial, NCPolynomial
from ..exprio.tokens import TokenKind, TokenStream

logger = logging.getLogger(__name__)

TEMPLATE_VARIABLES = ("r", "s", "t")
"""Symbols that may appear in template superscripts."""

_GENERATOR_SYMBOLS = {"D1", "D2", "E", "F"}
_INVERSE_SYMBOLS = {"Dinv1": 1, "Dinv2": 2}

FactorSource = Callable[[str, int], NCPolynomial]


@dataclass(frozen=True)
class Affine:
    """An integer affine expression ``constant + sum(coefficient * symbol)``."""

    constant: int
    coefficients: tuple[tuple[str, int], ...] = ()

    def evaluate(self, env: dict[str, int]) -> int:
        try:
            return self.constant + sum(c * env[name] for name, c in self.coefficients)
        except KeyError as exc:
            raise RuleTableError(f"symbol {exc.args[0]!r} is not bound here") from exc

    def unit_variable(self) -> Optional[tuple[str, int]]:
        """Return ``(symbol, constant)`` when the expression is ``symbol + constant``."""
        if len(self.coefficients) == 1 and self.coefficients[0][1] == 1:
            return self.coefficients[0][0], self.constant
        return None

    def __str__(self):
        prefixes = {1: "", -1: "-"}
        parts = [f"{prefixes.get(c, c)}{name}" for name, c in self.coefficients]
        if self.constant or not parts:
            parts.append(str(self.constant))
        return "+".join(parts).replace("+-", "-")


@dataclass(frozen=True)
class TemplateFactor:
    symbol: str
    index: Affine

    def __str__(self):
        return f"{self.symbol}^({self.index})"


@dataclass(frozen=True)
class TemplateTerm:
    coefficient: Fraction
    factors: tuple[TemplateFactor, ...]
    summation: Optional[tuple[str, Affine, Affine]] = None


@dataclass(frozen=True)
class TemplateBracket:
    sign: int
    left: TemplateFactor
    right: TemplateFactor

    def solve(self, a: int, b: int) -> Optional[dict[str, int]]:
        """Bind the template symbols so that this bracket reads [X^a, Y^b]."""
        left, right = self.left.index.unit_variable(), self.right.index.unit_variable()
        if left is None or right is None or left[0] == right[0]:
            return None
        return {left[0]: a - left[1], right[0]: b - right[1]}

    def superscripts(self, env: dict[str, int]) -> tuple[int, int]:
        return self.left.index.evaluate(env), self.right.index.evaluate(env)


@dataclass(frozen=True)
class RuleTemplate:
    """
    One line of the rule file.

    Attributes:
        brackets (tuple[TemplateBracket, ...]): One bracket for a plain
            commutator relation, two (with signs) for a difference relation.
        rhs (tuple[TemplateTerm, ...]): The right-hand side; empty means 0.
        line (int): Source line number, for error messages.
    """

    brackets: tuple[TemplateBracket, ...]
    rhs: tuple[TemplateTerm, ...]
    line: int

    @property
    def is_difference(self) -> bool:
        return len(self.brackets) == 2

    @property
    def families(self) -> tuple[Family, Family]:
        bracket = self.brackets[0]
        return Family[bracket.left.symbol], Family[bracket.right.symbol]

    def evaluate_rhs(self, env: dict[str, int], source: FactorSource) -> NCPolynomial:
        total = NCPolynomial.zero()
        for term in self.rhs:
            if term.summation is None:
                bindings = [env]
            else:
                name, lo, hi = term.summation
                bindings = [
                    {**env, name: value}
                    for value in range(lo.evaluate(env), hi.evaluate(env) + 1)
                ]
            for binding in bindings:
                product = NCPolynomial.constant(term.coefficient)
                for factor in term.factors:
                    product = product * source(factor.symbol, factor.index.evaluate(binding))
                    if product.is_zero():
                        break
                total = total + product
        return total


@dataclass(frozen=True)
class RewriteRule:
    """An oriented rule ``x y -> y x + [x, y]`` for an out-of-order pair."""

    pattern: tuple[Generator, Generator]
    replacement: NCPolynomial

    @property
    def degree(self) -> int:
        return self.pattern[0].degree + self.pattern[1].degree


class _RuleLineParser:
    """Recursive descent over one rule line."""

    def __init__(self, text: str, line: int):
        self.line = line
        try:
            self.stream = TokenStream(text)
        except ExprSyntaxError as exc:
            raise RuleTableError(f"column {exc.column}: {exc.msg}", line) from exc

    def fail(self, msg: str) -> RuleTableError:
        token = self.stream.current
        return RuleTableError(f"column {token.column}: {msg}", self.line)

    def expect(self, kind: TokenKind, what: str = None):
        if not self.stream.at(kind):
            raise self.fail(f"expected {what or kind.value}, found {self.stream.current.describe()}")
        return self.stream.advance()

    def parse(self) -> RuleTemplate:
        brackets = [self.bracket(1)]
        if self.stream.at(TokenKind.MINUS, TokenKind.PLUS):
            sign = -1 if self.stream.advance().kind is TokenKind.MINUS else 1
            brackets.append(self.bracket(sign))
        self.expect(TokenKind.ARROW)
        rhs = self.rhs()
        self.expect(TokenKind.EOF)
        return RuleTemplate(tuple(brackets), tuple(rhs), self.line)

    def bracket(self, sign: int) -> TemplateBracket:
        self.expect(TokenKind.LBRACK)
        left = self.factor(_GENERATOR_SYMBOLS)
        self.expect(TokenKind.COMMA)
        right = self.factor(_GENERATOR_SYMBOLS)
        self.expect(TokenKind.RBRACK)
        return TemplateBracket(sign, left, right)

    def rhs(self) -> list[TemplateTerm]:
        if self.stream.at(TokenKind.INT) and self.stream.current.text == "0":
            if self.stream.peek().kind is TokenKind.EOF:
                self.stream.advance()
                return []
        sign = 1
        if self.stream.at(TokenKind.MINUS, TokenKind.PLUS):
            sign = -1 if self.stream.advance().kind is TokenKind.MINUS else 1
        terms = [self.term(sign)]
        while self.stream.at(TokenKind.MINUS, TokenKind.PLUS):
            sign = -1 if self.stream.advance().kind is TokenKind.MINUS else 1
            terms.append(self.term(sign))
        return terms

    def term(self, sign: int) -> TemplateTerm:
        coefficient = Fraction(sign)
        if self.stream.at(TokenKind.INT):
            numerator = int(self.stream.advance().text)
            denominator = 1
            if self.stream.accept(TokenKind.SLASH):
                denominator = int(self.expect(TokenKind.INT).text)
                if denominator == 0:
                    raise self.fail("zero denominator")
            coefficient *= Fraction(numerator, denominator)
            if not self.stream.accept(TokenKind.STAR):
                return TemplateTerm(coefficient, ())
        summation = None
        if self.stream.at(TokenKind.IDENT) and self.stream.current.text == "sum":
            self.stream.advance()
            self.expect(TokenKind.LPAREN)
            name = self.expect(TokenKind.IDENT, "summation index").text
            if name not in TEMPLATE_VARIABLES:
                raise self.fail(f"unknown summation index {name!r}")
            self.expect(TokenKind.EQUALS)
            lo = self.affine()
            self.expect(TokenKind.DOTDOT)
            hi = self.affine()
            self.expect(TokenKind.RPAREN)
            summation = (name, lo, hi)
        factors = [self.factor(_GENERATOR_SYMBOLS | set(_INVERSE_SYMBOLS))]
        while self.stream.accept(TokenKind.STAR):
            factors.append(self.factor(_GENERATOR_SYMBOLS | set(_INVERSE_SYMBOLS)))
        return TemplateTerm(coefficient, tuple(factors), summation)

    def factor(self, allowed: set[str]) -> TemplateFactor:
        token = self.expect(TokenKind.IDENT, "generator")
        if token.text not in allowed:
            raise RuleTableError(f"column {token.column}: unknown generator {token.text!r}", self.line)
        self.expect(TokenKind.CARET)
        if self.stream.accept(TokenKind.LPAREN):
            index = self.affine()
            self.expect(TokenKind.RPAREN)
        else:
            index = self.affine_atom(1, {}, 0)
        return TemplateFactor(token.text, index)

    def affine(self) -> Affine:
        coefficients: dict[str, int] = {}
        constant = 0
        sign = 1
        if self.stream.accept(TokenKind.MINUS):
            sign = -1
        constant = self.affine_atom(sign, coefficients, constant).constant
        while self.stream.at(TokenKind.PLUS, TokenKind.MINUS):
            sign = -1 if self.stream.advance().kind is TokenKind.MINUS else 1
            constant = self.affine_atom(sign, coefficients, constant).constant
        return Affine(constant, tuple(sorted((k, v) for k, v in coefficients.items() if v)))

    def affine_atom(self, sign: int, coefficients: dict[str, int], constant: int) -> Affine:
        token = self.stream.current
        if token.kind is TokenKind.INT:
            self.stream.advance()
            constant += sign * int(token.text)
        elif token.kind is TokenKind.IDENT and token.text in TEMPLATE_VARIABLES:
            self.stream.advance()
            coefficients[token.text] = coefficients.get(token.text, 0) + sign
        else:
            raise self.fail(f"expected superscript, found {token.describe()}")
        return Affine(constant, tuple(sorted(coefficients.items())))


def parse_rule_text(text: str) -> list[RuleTemplate]:
    """
    Parse rule file contents.

    Blank lines and ``#`` comments are skipped. A ``# format: N`` header, if
    present, must name a supported version.

    Raises:
        RuleTableError: With the offending line number.
    """
    templates = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            header = line[1:].strip()
            if header.startswith("format:"):
                version = header.split(":", 1)[1].strip()
                if version != str(RULE_FILE_FORMAT_VERSION):
                    raise RuleTableError(f"unsupported rule file format {version!r}", number)
            continue
        if not line:
            continue
        templates.append(_RuleLineParser(line, number).parse())
    if not templates:
        raise RuleTableError("rule file contains no relations")
    return templates


def load_rule_file(path: Union[str, Path]) -> list[RuleTemplate]:
    """Read and parse a rule file from disk."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RuleTableError(f"cannot read rule file {path}: {exc}") from exc
    templates = parse_rule_text(text)
    logger.debug("loaded %d relation templates from %s", len(templates), path)
    return templates


class RelationTable:
    """
    Commutators [x, y] of generator pairs, instantiated from rule templates.

    Every pair of admissible generators is covered by exactly one template:
    a plain bracket relation in either orientation, or (for two generators
    of the same family without a plain relation) a difference relation solved
    by recursion towards the diagonal, where [X^a, X^a] = 0.

    Args:
        templates (Iterable[RuleTemplate]): Parsed rule file.
        alphabet (Alphabet): Admissible generators.
        inverse_coefficient (Callable[[int, int], NCPolynomial]): Returns the
            D-inverse coefficient for (family index, t); used for ``Dinv``.

    Raises:
        RuleTableError: On duplicate, malformed or unsolvable templates.
    """

    def __init__(
        self,
        templates: Iterable[RuleTemplate],
        alphabet: Alphabet,
        inverse_coefficient: Callable[[int, int], NCPolynomial],
    ):
        self.alphabet = alphabet
        self.templates = tuple(templates)
        self._inverse_coefficient = inverse_coefficient
        self._plain: dict[tuple[Family, Family], RuleTemplate] = {}
        self._difference: dict[Family, RuleTemplate] = {}
        self._cache: dict[tuple[Generator, Generator], NCPolynomial] = {}
        self._lock = threading.RLock()
        for template in self.templates:
            self._register(template)

    def _register(self, template: RuleTemplate):
        for bracket in template.brackets:
            if bracket.solve(0, 0) is None:
                raise RuleTableError(
                    "bracket superscripts must be distinct symbols plus constants", template.line
                )
        left, right = template.families
        if template.is_difference:
            if left != right or any(
                (Family[b.left.symbol], Family[b.right.symbol]) != (left, left)
                for b in template.brackets
            ):
                raise RuleTableError("a difference relation must stay within one family", template.line)
            if left in self._difference:
                raise RuleTableError(f"duplicate {left.name}-{left.name} relation", template.line)
            self._difference[left] = template
            return
        if (left, right) in self._plain or (right, left) in self._plain:
            raise RuleTableError(f"duplicate [{left.name}, {right.name}] relation", template.line)
        self._plain[(left, right)] = template

    def source(self, symbol: str, superscript: int) -> NCPolynomial:
        """Resolve a template factor to an element of the free algebra."""
        if superscript < 0:
            return NCPolynomial.zero()
        if symbol in _INVERSE_SYMBOLS:
            return self._inverse_coefficient(_INVERSE_SYMBOLS[symbol], superscript)
        if superscript == 0:
            return NCPolynomial.one()
        return NCPolynomial.generator(Generator(Family[symbol], superscript), self.alphabet)

    def _instantiate(self, template: RuleTemplate, env: dict[str, int], pair) -> NCPolynomial:
        try:
            return template.evaluate_rhs(env, self.source).with_alphabet(self.alphabet)
        except InadmissibleGenerator as exc:
            raise RuleTableError(
                f"relation for [{pair[0]}, {pair[1]}] leaves the alphabet: {exc}", template.line
            ) from exc

    def commutator(self, x: Generator, y: Generator) -> NCPolynomial:
        """
        Return [x, y] as an element of the free algebra.

        Raises:
            RuleTableError: If no template covers the pair.
        """
        key = (x, y)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self._compute(x, y)
        with self._lock:
            self._cache.setdefault(key, value)
        return value

    def _compute(self, x: Generator, y: Generator) -> NCPolynomial:
        self.alphabet.check(x)
        self.alphabet.check(y)
        if x == y:
            return NCPolynomial.zero(self.alphabet)
        template = self._plain.get((x.family, y.family))
        if template is not None:
            env = template.brackets[0].solve(x.superscript, y.superscript)
            return self._instantiate(template, env, (x, y))
        template = self._plain.get((y.family, x.family))
        if template is not None:
            env = template.brackets[0].solve(y.superscript, x.superscript)
            return -self._instantiate(template, env, (y, x))
        if x.family == y.family and x.family in self._difference:
            if x.superscript < y.superscript:
                return -self.commutator(y, x)
            return self._solve_difference(x, y)
        raise RuleTableError(f"no relation covers [{x}, {y}]")

    def _solve_difference(self, x: Generator, y: Generator) -> NCPolynomial:
        family = x.family
        a, b = x.superscript, y.superscript
        template = self._difference[family]
        best = None
        for slot, bracket in enumerate(template.brackets):
            other = template.brackets[1 - slot]
            for target, orientation in (((a, b), 1), ((b, a), -1)):
                env = bracket.solve(*target)
                p, q = other.superscripts(env)
                same_pair = {p, q} == {a, b}
                gap = abs(p - q)
                if not same_pair and gap >= a - b:
                    continue
                if best is None or gap < best[0]:
                    best = (gap, bracket, other, orientation, env, (p, q), same_pair)
        if best is None:
            raise RuleTableError(
                f"{family.name}-{family.name} relation cannot be solved for [{x}, {y}]", template.line
            )
        _, bracket, other, orientation, env, (p, q), same_pair = best
        coefficient = Fraction(bracket.sign * orientation)
        remainder = NCPolynomial.zero(self.alphabet)
        if same_pair:
            coefficient += other.sign * (1 if (p, q) == (a, b) else -1)
        elif p != q:
            remainder = self.commutator(Generator(family, p), Generator(family, q)).scale(other.sign)
        if coefficient == 0:
            raise RuleTableError(
                f"{family.name}-{family.name} relation is degenerate at [{x}, {y}]", template.line
            )
        rhs = self._instantiate(template, env, (x, y))
        return (rhs - remainder) / coefficient

    def rewrite(self, x: Generator, y: Generator) -> NCPolynomial:
        """The replacement ``y x + [x, y]`` for the word ``x y``."""
        swapped = NCPolynomial({NCMonomial((y, x)): 1}, self.alphabet)
        return swapped + self.commutator(x, y)

    def rules_up_to(self, degree: int) -> list[RewriteRule]:
        """
        Materialize the rewrite rules for all out-of-order pairs of total
        canonical degree at most ``degree``.
        """
        generators = [
            Generator(family, superscript)
            for family in Family
            for superscript in range(self.alphabet.min_superscript(family), degree + 1)
        ]
        rules = []
        for x in generators:
            for y in generators:
                if x > y and x.degree + y.degree <= degree:
                    rules.append(RewriteRule((x, y), self.rewrite(x, y)))
        rules.sort(key=lambda rule: (rule.degree, rule.pattern))
        return rules
