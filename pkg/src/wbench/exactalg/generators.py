"""Generators of Y_2(sigma) and the alphabet of a given shift.

A :class:`Generator` is a family and a superscript; an :class:`Alphabet` fixes
the shift 2n - 2 and admits only E superscripts above it.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from ..errors import AlphabetMismatch, InadmissibleGenerator, InvalidArgument


class Family(IntEnum):
    """
    Generator families of the shifted Yangian, in PBW order.

    The integer values fix the block order of ordered words: the F-block,
    then D1, then D2, then E.
    """

    F = 0
    D1 = 1
    D2 = 2
    E = 3

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls[text]
        except KeyError as exc:
            raise InvalidArgument(f"unknown generator family: {text!r}") from exc


@dataclass(frozen=True, order=True)
class Generator:
    """
    A single generator X^(r) of the shifted Yangian.

    Comparison follows the PBW order: family first, then superscript.

    Attributes:
        family (Family): One of F, D1, D2, E.
        superscript (int): The superscript r >= 1, also its canonical degree.
    """

    family: Family
    superscript: int

    def __post_init__(self):
        if not isinstance(self.superscript, int) or isinstance(self.superscript, bool):
            raise InadmissibleGenerator(f"superscript must be an integer: {self.superscript!r}")
        if self.superscript < 1:
            raise InadmissibleGenerator(
                f"{self.family.name} superscript must be at least 1, got {self.superscript}"
            )

    @property
    def degree(self) -> int:
        return self.superscript

    @property
    def kazhdan_degree(self) -> int:
        """The doubled grading convention used for reporting."""
        return 2 * self.superscript

    def __str__(self):
        return f"{self.family.name}^{self.superscript}"


@dataclass(frozen=True)
class Alphabet:
    """
    The admissible generators of Y_2(sigma) for a given shift.

    An E-generator E^(r) is admissible only when r exceeds the shift
    ``s_12 = 2n - 2``; D1, D2 and F admit every positive superscript.

    Attributes:
        shift (int): The off-diagonal shift s_12.
    """

    shift: int

    @classmethod
    def for_rank(cls, n: int) -> "Alphabet":
        return cls(shift=2 * n - 2)

    @property
    def n(self) -> int:
        return self.shift // 2 + 1

    def min_superscript(self, family: Family) -> int:
        return self.shift + 1 if family is Family.E else 1

    def admits(self, generator: Generator) -> bool:
        return generator.superscript >= self.min_superscript(generator.family)

    def check(self, generator: Generator) -> Generator:
        if not self.admits(generator):
            raise InadmissibleGenerator(
                f"E superscript must exceed 2n-2 = {self.shift}, got {generator}"
            )
        return generator

    def generator(self, family: Family, superscript: int) -> Generator:
        return self.check(Generator(family, superscript))

    def __str__(self):
        return f"Y2(shift={self.shift})"


def merge_alphabets(left: Optional[Alphabet], right: Optional[Alphabet]) -> Optional[Alphabet]:
    """Return the common alphabet of two operands, ``None`` meaning unconstrained."""
    if left is None:
        return right
    if right is None or left == right:
        return left
    raise AlphabetMismatch(left, right)
