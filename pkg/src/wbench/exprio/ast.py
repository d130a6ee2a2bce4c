"""Syntax tree of the expression language.

Nodes are frozen dataclasses. Source positions are carried for error
reporting but take no part in equality, so two parses of equivalent text
compare equal.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from ..errors import InvalidArgument

GENERATOR_ATOMS = ("D1", "D2", "E", "F")
"""Atoms naming Yangian generators, written ``NAME^r``."""

CENTRAL_ATOM = "Z"
"""The central coefficient atom, written ``Z^r``."""

INDEXED_ATOMS = ("e", "x")
"""Commutative atoms written ``e_j`` and ``x_i``."""

PLAIN_ATOMS = ("u", "v", "w")
"""Commutative atoms without an index."""


@dataclass(frozen=True)
class Position:
    line: int = 1
    column: int = 1

    def __str__(self):
        return f"{self.line}:{self.column}"


def _pos():
    return field(default=Position(), compare=False, repr=False)


@dataclass(frozen=True)
class Number:
    """A non-negative exact rational literal; negation is a :class:`Neg` node."""

    value: Fraction
    pos: Position = _pos()

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0:
            raise InvalidArgument("number literals are non-negative; use Neg")


@dataclass(frozen=True)
class Atom:
    """
    A named atom.

    Attributes:
        name (str): One of D1, D2, E, F, Z, e, x, u, v, w.
        index (int, optional): Superscript (D1, D2, E, F, Z) or subscript
            (e, x); ``None`` for u, v, w.
    """

    name: str
    index: Optional[int] = None
    pos: Position = _pos()

    @property
    def text(self) -> str:
        if self.name in GENERATOR_ATOMS or self.name == CENTRAL_ATOM:
            return f"{self.name}^{self.index}"
        if self.name in INDEXED_ATOMS:
            return f"{self.name}_{self.index}"
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: "Expression"
    pos: Position = _pos()


@dataclass(frozen=True)
class Sum:
    """Terms added left to right; subtraction is a :class:`Neg` term."""

    terms: tuple["Expression", ...]
    pos: Position = _pos()


@dataclass(frozen=True)
class Product:
    factors: tuple["Expression", ...]
    pos: Position = _pos()


@dataclass(frozen=True)
class Power:
    base: "Expression"
    exponent: int
    pos: Position = _pos()


@dataclass(frozen=True)
class Commutator:
    """``[left, right]``, standing for left * right - right * left."""

    left: "Expression"
    right: "Expression"
    pos: Position = _pos()

    def desugar(self) -> Sum:
        return Sum(
            (
                Product((self.left, self.right), self.pos),
                Neg(Product((self.right, self.left), self.pos), self.pos),
            ),
            self.pos,
        )


Expression = Union[Number, Atom, Neg, Sum, Product, Power, Commutator]
