"""The free associative algebra over Q on Yangian generators.

An :class:`NCPolynomial` is a finite linear combination of words
(:class:`NCMonomial`) with Fraction coefficients. Nothing here knows about the
Yangian relations; products are plain concatenation and reduction is the job
of :mod:`wbench.yangian`.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Optional, Union

from .generators import Alphabet, Generator, merge_alphabets
from .scalars import ScalarLike, as_scalar

Word = tuple[Generator, ...]


@dataclass(frozen=True)
class NCMonomial:
    """
    A word in the generators.

    Attributes:
        word (tuple[Generator, ...]): The letters, left to right.
        degree (int): Sum of the superscripts (canonical degree), derived.
    """

    word: Word = ()
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "degree", sum(g.superscript for g in self.word))

    def __len__(self):
        return len(self.word)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.word)

    def __mul__(self, other: "NCMonomial") -> "NCMonomial":
        return NCMonomial(self.word + other.word)

    def sort_key(self) -> tuple:
        """Monomial order: degree, then families position-wise, then superscripts."""
        return (
            self.degree,
            tuple(g.family for g in self.word),
            tuple(g.superscript for g in self.word),
        )

    def is_ordered(self) -> bool:
        return all(a <= b for a, b in zip(self.word, self.word[1:]))

    def __str__(self):
        if not self.word:
            return "1"
        return " * ".join(str(g) for g in self.word)


IDENTITY = NCMonomial(())


class NCPolynomial:
    """
    An element of the free algebra: a map from words to nonzero Fractions.

    Instances are immutable. Terms are stored in the monomial order so that
    iteration, printing and hashing are reproducible.

    Args:
        terms (Mapping[NCMonomial, ScalarLike], optional): Coefficients; zero
            entries are dropped.
        alphabet (Alphabet, optional): The ambient generator alphabet, or
            ``None`` for an element (such as a scalar) that fits any alphabet.
    """

    __slots__ = ("_terms", "_alphabet", "_hash")

    def __init__(
        self,
        terms: Optional[Mapping[NCMonomial, ScalarLike]] = None,
        alphabet: Optional[Alphabet] = None,
    ):
        clean = {}
        for monomial, coefficient in (terms or {}).items():
            coefficient = as_scalar(coefficient)
            if coefficient:
                clean[monomial] = coefficient
        self._terms = {m: clean[m] for m in sorted(clean, key=NCMonomial.sort_key)}
        self._alphabet = alphabet
        self._hash = None

    @classmethod
    def zero(cls, alphabet: Optional[Alphabet] = None) -> "NCPolynomial":
        return cls({}, alphabet)

    @classmethod
    def constant(cls, value: ScalarLike, alphabet: Optional[Alphabet] = None) -> "NCPolynomial":
        return cls({IDENTITY: value}, alphabet)

    @classmethod
    def one(cls, alphabet: Optional[Alphabet] = None) -> "NCPolynomial":
        return cls.constant(1, alphabet)

    @classmethod
    def from_word(
        cls,
        word: Iterable[Generator],
        coefficient: ScalarLike = 1,
        alphabet: Optional[Alphabet] = None,
    ) -> "NCPolynomial":
        word = tuple(word)
        if alphabet is not None:
            for letter in word:
                alphabet.check(letter)
        return cls({NCMonomial(word): coefficient}, alphabet)

    @classmethod
    def generator(cls, generator: Generator, alphabet: Optional[Alphabet] = None) -> "NCPolynomial":
        return cls.from_word((generator,), 1, alphabet)

    @property
    def terms(self) -> Mapping[NCMonomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def alphabet(self) -> Optional[Alphabet]:
        return self._alphabet

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[NCMonomial]:
        return list(self._terms)

    def coefficient(self, monomial: Union[NCMonomial, Iterable[Generator]]) -> Fraction:
        if not isinstance(monomial, NCMonomial):
            monomial = NCMonomial(tuple(monomial))
        return self._terms.get(monomial, Fraction(0))

    @property
    def degree(self) -> Optional[int]:
        """Largest term degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(m.degree for m in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(not m.word for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(IDENTITY, Fraction(0))

    def with_alphabet(self, alphabet: Optional[Alphabet]) -> "NCPolynomial":
        if alphabet is not None:
            for monomial in self._terms:
                for letter in monomial:
                    alphabet.check(letter)
        return NCPolynomial(self._terms, alphabet)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _coerce(self, other) -> Optional["NCPolynomial"]:
        if isinstance(other, NCPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return NCPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        alphabet = merge_alphabets(self._alphabet, other._alphabet)
        result = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            result[monomial] = result.get(monomial, 0) + coefficient
        return NCPolynomial(result, alphabet)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial({m: -c for m, c in self._terms.items()}, self._alphabet)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: ScalarLike) -> "NCPolynomial":
        factor = as_scalar(factor)
        return NCPolynomial({m: c * factor for m, c in self._terms.items()}, self._alphabet)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / as_scalar(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = NCPolynomial.one(self._alphabet)
        for _ in range(exponent):
            result = nc_mul(result, self)
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __iter__(self) -> Iterator[tuple[NCMonomial, Fraction]]:
        return iter(self._terms.items())

    def __str__(self):
        from ..exprio.printer import format_ncpolynomial

        return format_ncpolynomial(self)

    def __repr__(self):
        return f"NCPolynomial({self})"


def nc_mul(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    """
    Concatenation product in the free algebra.

    Raises:
        AlphabetMismatch: If both operands carry different alphabets.
    """
    alphabet = merge_alphabets(a.alphabet, b.alphabet)
    result: dict[NCMonomial, Fraction] = {}
    for left, lc in a.items():
        for right, rc in b.items():
            monomial = left * right
            result[monomial] = result.get(monomial, 0) + lc * rc
    return NCPolynomial(result, alphabet)


def nc_commutator(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
    """Return ab - ba, unreduced."""
    return nc_mul(a, b) - nc_mul(b, a)
