"""The shifted Yangian Y_2(sigma) and its truncated quotients.

:class:`YangianAlgebra` owns a :class:`~wbench.yangian.rules.RelationTable`
and reduces free-algebra elements to PBW normal form: every word becomes a
combination of ordered words (F-block, D1-block, D2-block, E-block, each
ascending in superscript). In the truncated modes non-surviving letters are
substituted before any reordering, and every substitution is derived from the
loaded relation table.
"""

import logging
import threading
from collections.abc import Iterable
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from inflection import underscore

from ..constants import DEFAULT_SERIES_ORDER, DEFAULT_STEP_BUDGET, MINIMUM_N
from ..errors import InvalidArgument, InvariantError, RewriteBudgetExceeded, RuleTableError
from ..exactalg import Alphabet, Family, Generator, NCMonomial, NCPolynomial
from ..exactalg.generators import merge_alphabets
from ..exactalg.ncpoly import Word
from ..utils import get_default_rule_file
from .rules import RelationTable, RuleTemplate, load_rule_file
from .series import DSeries

logger = logging.getLogger(__name__)


class Mode(Enum):
    """Which algebra is being computed in."""

    FULL = "full"
    TRUNCATED_GL = "gl"
    TRUNCATED_SO = "so"

    @classmethod
    def parse(cls, value: Union[str, "Mode"]) -> "Mode":
        if isinstance(value, Mode):
            return value
        key = underscore(str(value).strip()).replace("-", "_")
        aliases = {
            "full": cls.FULL,
            "gl": cls.TRUNCATED_GL,
            "truncated_gl": cls.TRUNCATED_GL,
            "so": cls.TRUNCATED_SO,
            "truncated_so": cls.TRUNCATED_SO,
        }
        if key not in aliases:
            raise InvalidArgument(f"unknown mode {value!r}; expected full, gl or so")
        return aliases[key]

    @property
    def truncated(self) -> bool:
        return self is not Mode.FULL


class _StepCounter:
    def __init__(self, budget: int):
        self.budget = budget
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise RewriteBudgetExceeded(self.steps, self.budget)


class YangianAlgebra:
    """
    Y_2(sigma) with shift s_12 = 2n - 2, or one of its truncated quotients.

    Args:
        n (int): Rank parameter, at least 2.
        mode (Mode): FULL, TRUNCATED_GL (D1^(r) = 0 for r > 1) or
            TRUNCATED_SO (additionally Z^(2r-1) = 0 for r = 1..n).
        relation_table (RelationTable): Commutators of generator pairs.
        series (DSeries): The commutative D-ring used by ``relation_table``.
        step_budget (int): Rewrite steps allowed per normal form call.
    """

    def __init__(
        self,
        n: int,
        mode: Mode,
        relation_table: RelationTable,
        series: DSeries,
        step_budget: int = DEFAULT_STEP_BUDGET,
    ):
        self.n = n
        self.mode = mode
        self.shift = 2 * n - 2
        self.alphabet = relation_table.alphabet
        self.relation_table = relation_table
        self.series = series
        self.step_budget = step_budget
        self._words: dict[Word, NCPolynomial] = {}
        self._children: dict[Word, tuple[Word, ...]] = {}
        self._letters: dict[Generator, NCPolynomial] = {}
        self._lock = threading.RLock()
        self._gl: Optional["YangianAlgebra"] = None

    def __repr__(self):
        return f"YangianAlgebra(n={self.n}, mode={self.mode.value})"

    # Generators

    @property
    def top(self) -> int:
        """2n - 1: the largest surviving D2 superscript in the truncated quotients."""
        return 2 * self.n - 1

    def generator(self, family: Union[Family, str], superscript: int) -> NCPolynomial:
        if isinstance(family, str):
            family = Family.parse(family)
        return NCPolynomial.generator(self.alphabet.generator(family, superscript), self.alphabet)

    def is_surviving(self, generator: Generator) -> bool:
        """Whether ``generator`` is a free generator of the current quotient."""
        if self.mode is Mode.FULL:
            return self.alphabet.admits(generator)
        family, r = generator.family, generator.superscript
        if family is Family.D1 or family is Family.F:
            return r == 1
        if family is Family.E:
            return r == self.top
        if r > self.top:
            return False
        return not (self.mode is Mode.TRUNCATED_SO and r % 2 == 1)

    def surviving_generators(self, degree: Optional[int] = None) -> list[Generator]:
        """
        Free generators of canonical degree at most ``degree``.

        In the truncated modes the list is finite and ``degree`` may be
        omitted; in FULL mode it is required.
        """
        if degree is None:
            if self.mode is Mode.FULL:
                raise InvalidArgument("FULL mode has infinitely many generators; give a degree")
            degree = self.top
        return [
            Generator(family, r)
            for family in Family
            for r in range(self.alphabet.min_superscript(family), degree + 1)
            if self.is_surviving(Generator(family, r))
        ]

    def d_inverse(self, i: int, t: int) -> NCPolynomial:
        return self.series.to_nc(self.series.inverse(i, t), self.alphabet)

    # Truncation substitutions

    def _gl_algebra(self) -> "YangianAlgebra":
        if self._gl is None:
            self._gl = YangianAlgebra(
                self.n, Mode.TRUNCATED_GL, self.relation_table, self.series, self.step_budget
            )
        return self._gl

    def _solve_for(self, relation: NCPolynomial, target: Generator, context: str) -> NCPolynomial:
        """Solve ``relation = 0`` for the single letter ``target``."""
        coefficient = relation.coefficient((target,))
        if not coefficient:
            raise RuleTableError(f"{context} does not determine {target}")
        rest = relation - NCPolynomial.generator(target).scale(coefficient)
        return (-rest).scale(Fraction(1) / coefficient).with_alphabet(self.alphabet)

    def _collapse(self, generator: Generator) -> NCPolynomial:
        # [D1^(2), X^(r-1)] vanishes once D1^(2) does.
        below = Generator(generator.family, generator.superscript - 1)
        relation = self.relation_table.commutator(Generator(Family.D1, 2), below)
        return self._solve_for(relation, generator, f"[D1^2, {below}]")

    def _d2_tail(self, generator: Generator) -> NCPolynomial:
        # D2^(m) for m > 2n-1, read off [E^(m), F^(1)] with E^(m) already collapsed.
        e = Generator(Family.E, generator.superscript)
        f = Generator(Family.F, 1)
        relation = self.relation_table.commutator(e, f)
        product = NCPolynomial({NCMonomial((e, f)): 1, NCMonomial((f, e)): -1}, self.alphabet)
        return self._solve_for(relation - product, generator, f"[{e}, {f}]")

    def _so_elimination(self, generator: Generator) -> NCPolynomial:
        central = self.series.to_nc(
            self.series.central(self.n, generator.superscript), self.alphabet
        )
        reduced = self._gl_algebra().normal_form(central)
        if reduced.coefficient((generator,)) != 1:
            raise InvariantError(f"Z^{generator.superscript} is not unitriangular in {generator}")
        logger.debug("eliminating %s via Z^%d", generator, generator.superscript)
        return NCPolynomial.generator(generator, self.alphabet) - reduced

    def _letter_substitution(self, generator: Generator) -> NCPolynomial:
        with self._lock:
            cached = self._letters.get(generator)
        if cached is not None:
            return cached
        family, r = generator.family, generator.superscript
        if family is Family.D1:
            value = NCPolynomial.zero(self.alphabet)
        elif family in (Family.E, Family.F):
            value = self._collapse(generator)
        elif r > self.top:
            value = self._d2_tail(generator)
        else:
            value = self._so_elimination(generator)
        with self._lock:
            self._letters.setdefault(generator, value)
        return value

    def precompute(self):
        """Compile the TRUNCATED_SO eliminations of D2^(odd) ahead of time."""
        if self.mode is Mode.TRUNCATED_SO:
            for r in range(1, self.top + 1, 2):
                self._letter_substitution(Generator(Family.D2, r))

    # Normal form

    @staticmethod
    def _splice(word: Word, start: int, length: int, middle: NCPolynomial) -> NCPolynomial:
        prefix, suffix = word[:start], word[start + length :]
        return NCPolynomial(
            {NCMonomial(prefix + m.word + suffix): c for m, c in middle.items()}
        )

    def _rewrite_once(self, word: Word) -> Optional[NCPolynomial]:
        if self.mode.truncated:
            for i, letter in enumerate(word):
                if not self.is_surviving(letter):
                    return self._splice(word, i, 1, self._letter_substitution(letter))
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                return self._splice(word, i, 2, self.relation_table.rewrite(word[i], word[i + 1]))
        return None

    def _cached(self, word: Word) -> Optional[NCPolynomial]:
        with self._lock:
            return self._words.get(word)

    def _reduce_word(self, word: Word, counter: _StepCounter) -> NCPolynomial:
        found = self._cached(word)
        if found is not None:
            return found
        stack = [word]
        expansions: dict[Word, NCPolynomial] = {}
        while stack:
            current = stack[-1]
            if self._cached(current) is not None:
                stack.pop()
                continue
            expansion = expansions.get(current)
            if expansion is None:
                expansion = self._rewrite_once(current)
                if expansion is None:
                    with self._lock:
                        self._words.setdefault(
                            current, NCPolynomial({NCMonomial(current): 1}, self.alphabet)
                        )
                    stack.pop()
                    continue
                counter.tick()
                expansions[current] = expansion
                with self._lock:
                    self._children.setdefault(
                        current, tuple(m.word for m in expansion.monomials())
                    )
            pending = [m.word for m in expansion.monomials() if self._cached(m.word) is None]
            if pending:
                for child in pending:
                    if child in expansions:
                        raise RuleTableError(f"rewriting cycles through {NCMonomial(child)}")
                stack.extend(pending)
                continue
            total: dict[NCMonomial, Fraction] = {}
            for monomial, coefficient in expansion.items():
                for reduced, c in self._cached(monomial.word).items():
                    total[reduced] = total.get(reduced, 0) + coefficient * c
            with self._lock:
                self._words.setdefault(current, NCPolynomial(total, self.alphabet))
            stack.pop()
        return self._cached(word)

    def _rewrite_steps(self, words: Iterable[Word], budget: int) -> int:
        """
        Count the distinct rewritable words reachable from ``words``.

        This is the number of rewrites a reduction from an empty cache performs,
        so it does not depend on what earlier calls left in the cache.
        """
        seen: set[Word] = set()
        stack = list(words)
        steps = 0
        with self._lock:
            while stack:
                current = stack.pop()
                if current in seen:
                    continue
                seen.add(current)
                children = self._children.get(current)
                if children is None:
                    continue
                steps += 1
                if steps > budget:
                    raise RewriteBudgetExceeded(steps, budget)
                stack.extend(children)
        return steps

    def normal_form_with_steps(
        self, p: NCPolynomial, budget: Optional[int] = None
    ) -> tuple[NCPolynomial, int]:
        """
        Reduce ``p`` to PBW normal form and report the rewrite steps taken.

        The step count is the number of distinct words rewritten on the way,
        whether or not an earlier call already cached them, so it depends only
        on ``p`` and the algebra.

        Raises:
            RewriteBudgetExceeded: If more than ``budget`` rewrite steps are
                needed (default: the algebra's step budget).
            AlphabetMismatch: If ``p`` belongs to a different alphabet.
            InadmissibleGenerator: If ``p`` uses a letter outside the alphabet.
        """
        if p.alphabet is None:
            p = p.with_alphabet(self.alphabet)
        else:
            merge_alphabets(self.alphabet, p.alphabet)
        budget = self.step_budget if budget is None else budget
        counter = _StepCounter(budget)
        total: dict[NCMonomial, Fraction] = {}
        for monomial, coefficient in p.items():
            for reduced, c in self._reduce_word(monomial.word, counter).items():
                total[reduced] = total.get(reduced, 0) + coefficient * c
        steps = self._rewrite_steps((m.word for m in p.monomials()), budget)
        result = NCPolynomial(total, self.alphabet)
        logger.debug("normal form: %d terms in, %d out, %d steps", len(p), len(result), steps)
        return result, steps

    def normal_form(self, p: NCPolynomial, budget: Optional[int] = None) -> NCPolynomial:
        """Reduce ``p`` to PBW normal form (idempotent, linear, deterministic)."""
        return self.normal_form_with_steps(p, budget)[0]

    def is_normal(self, p: NCPolynomial) -> bool:
        return all(
            monomial.is_ordered() and all(self.is_surviving(g) for g in monomial)
            for monomial in p.monomials()
        )

    def multiply(self, *factors: NCPolynomial) -> NCPolynomial:
        """Reduced product of the factors, left to right."""
        result = NCPolynomial.one(self.alphabet)
        for factor in factors:
            result = self.normal_form(result * factor)
        return result

    def commutator(self, a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
        return self.normal_form(a * b - b * a)


def build_algebra(
    n: int,
    mode: Union[Mode, str] = Mode.FULL,
    rules: Union[str, Path, Iterable[RuleTemplate], None] = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
    series_order: int = DEFAULT_SERIES_ORDER,
) -> YangianAlgebra:
    """
    Construct Y_2(sigma) for rank parameter ``n`` in the given mode.

    Args:
        n (int): Rank parameter, at least 2.
        mode (Mode | str): ``full``, ``gl`` or ``so``.
        rules: Path to a rule file, parsed templates, or ``None`` for the
            shipped rule file.
        step_budget (int): Rewrite steps allowed per normal form call.
        series_order (int): Largest D superscript the D-ring carries.

    Returns:
        YangianAlgebra: The algebra; in TRUNCATED_SO mode the D2^(odd)
            eliminations are already compiled.

    Raises:
        InvalidArgument: If n < 2 or the mode is unknown.
        RuleTableError: If the rule file is malformed.
    """
    if not isinstance(n, int) or n < MINIMUM_N:
        raise InvalidArgument(f"n must be an integer >= {MINIMUM_N}, got {n!r}")
    mode = Mode.parse(mode)
    if rules is None:
        rules = get_default_rule_file()
    templates = load_rule_file(rules) if isinstance(rules, (str, Path)) else list(rules)
    alphabet = Alphabet.for_rank(n)
    series = DSeries(series_order)
    table = RelationTable(
        templates,
        alphabet,
        lambda i, t: series.to_nc(series.inverse(i, t), alphabet),
    )
    algebra = YangianAlgebra(n, mode, table, series, step_budget)
    algebra.precompute()
    logger.debug("built %r with %d relation templates", algebra, len(templates))
    return algebra
