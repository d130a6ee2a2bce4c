"""Simple types, fundamental degrees and diagram folding.

Fundamental degrees are primary data read from the shipped degree table;
classical types missing from the table fall back to the usual formulas.
"""

import logging
import re
from dataclasses import dataclass
from math import factorial, prod

from ..errors import InvalidArgument
from ..exprio.report import Report
from ..utils import get_default_degree_table

logger = logging.getLogger(__name__)

TYPES = "ABCDEFG"

_TYPE_RANK = re.compile(r"^\s*([A-Ga-g])\s*_?\s*([0-9]+)\s*$")

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def validate_type(type_name: str, rank: int) -> tuple[str, int]:
    """
    Normalize and check a simple type.

    Raises:
        InvalidArgument: For an unknown letter or a rank the type does not have.
    """
    type_name = str(type_name).strip().upper()
    if type_name not in TYPES or not isinstance(rank, int):
        raise InvalidArgument(f"unknown simple type {type_name}{rank}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if type_name in minimum:
        valid = rank >= minimum[type_name]
    else:
        valid = (type_name, rank) in _EXCEPTIONAL_ORDERS
    if not valid:
        raise InvalidArgument(f"there is no simple type {type_name}{rank}")
    return type_name, rank


def parse_type_rank(text: str) -> tuple[str, int]:
    """Parse ``B2``, ``b_2`` or ``E 6`` into (type, rank)."""
    match = _TYPE_RANK.match(text)
    if not match:
        raise InvalidArgument(f"cannot read a simple type from {text!r}")
    return validate_type(match.group(1), int(match.group(2)))


def weyl_group_order(type_name: str, rank: int) -> int:
    type_name, rank = validate_type(type_name, rank)
    if type_name == "A":
        return factorial(rank + 1)
    if type_name in "BC":
        return 2**rank * factorial(rank)
    if type_name == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_ORDERS[(type_name, rank)]


def classical_degrees(type_name: str, rank: int) -> tuple[int, ...]:
    """Degree formulas for types A, B, C and D."""
    type_name, rank = validate_type(type_name, rank)
    if type_name == "A":
        degrees = range(2, rank + 2)
    elif type_name in "BC":
        degrees = range(2, 2 * rank + 1, 2)
    elif type_name == "D":
        degrees = list(range(2, 2 * rank - 1, 2)) + [rank]
    else:
        raise InvalidArgument(f"{type_name}{rank} is exceptional; its degrees must be tabulated")
    return tuple(sorted(degrees))


@dataclass(frozen=True)
class DynkinDatum:
    """
    A simple type with its fundamental degrees.

    Attributes:
        type (str): One of A .. G.
        rank (int): The rank.
        degrees (tuple[int, ...]): Fundamental invariant degrees, ascending.
    """

    type: str
    rank: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) != self.rank:
            raise InvalidArgument(f"{self.name} needs {self.rank} degrees, got {self.degrees}")

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def kazhdan_degrees(self) -> tuple[int, ...]:
        """Doubled degrees, the grading of the invariants on the slice."""
        return tuple(2 * d for d in self.degrees)

    @property
    def weyl_order(self) -> int:
        return weyl_group_order(self.type, self.rank)

    def __str__(self):
        return self.name


def fundamental_degrees(type_name: str, rank: int) -> DynkinDatum:
    """
    Look up the fundamental degrees of a simple type.

    Raises:
        InvalidArgument: For an invalid type, or a table entry whose product
            is not the Weyl group order.
    """
    type_name, rank = validate_type(type_name, rank)
    table = get_default_degree_table()
    degrees = table.get((type_name, rank))
    if degrees is None:
        logger.warning("%s%d is not tabulated; using the degree formula", type_name, rank)
        degrees = classical_degrees(type_name, rank)
    datum = DynkinDatum(type_name, rank, tuple(sorted(degrees)))
    if prod(datum.degrees) != datum.weyl_order:
        raise InvalidArgument(f"degree table entry for {datum.name} does not multiply to |W|")
    return datum


@dataclass(frozen=True)
class FoldingPair:
    """
    A non-simply-laced type and the simply-laced type it is folded from.

    Attributes:
        folded (DynkinDatum): The non-simply-laced type.
        unfolded (DynkinDatum): The simply-laced type.
        gamma0_order (int): Order of the diagram automorphism group used.
    """

    folded: DynkinDatum
    unfolded: DynkinDatum
    gamma0_order: int

    def __str__(self):
        return f"({self.folded}, {self.unfolded})"


def folding_pair(type_name: str, rank: int) -> FoldingPair:
    """
    The folding partner: B_n from A_2n-1, C_n from D_n+1, F4 from E6, G2 from D4.

    Raises:
        InvalidArgument: For simply-laced types, which are not folded.
    """
    type_name, rank = validate_type(type_name, rank)
    partners = {
        "B": ("A", 2 * rank - 1, 2),
        "C": ("D", rank + 1, 2),
        "F": ("E", 6, 2),
        "G": ("D", 4, 3),
    }
    if type_name not in partners:
        raise InvalidArgument(f"{type_name}{rank} is simply laced and is not obtained by folding")
    unfolded_type, unfolded_rank, order = partners[type_name]
    return FoldingPair(
        fundamental_degrees(type_name, rank),
        fundamental_degrees(unfolded_type, unfolded_rank),
        order,
    )


def theorem_hypothesis(pair: FoldingPair) -> bool:
    """Whether the folded type is B_n (n >= 2), C_n with n even, or F4."""
    folded = pair.folded
    if folded.type == "B":
        return folded.rank >= 2
    if folded.type == "C":
        return folded.rank % 2 == 0
    return folded.type == "F"


def lambda_partition(datum: DynkinDatum) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Split degree indices by Kazhdan degree mod 4.

    Returns:
        tuple: (indices with Kazhdan degree = 0 mod 4, indices with = 2 mod 4).
    """
    lambda0 = tuple(i for i, d in enumerate(datum.kazhdan_degrees) if d % 4 == 0)
    lambda2 = tuple(i for i, d in enumerate(datum.kazhdan_degrees) if d % 4 == 2)
    return lambda0, lambda2


def _multiset(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def folding_degree_check(pair: FoldingPair) -> Report:
    """
    Compare the Kazhdan degrees of the folded type with the 0 mod 4 part of
    the unfolded ones.

    Passes iff the multisets agree and the 0 mod 4 part has exactly as many
    entries as the folded rank.
    """
    lambda0, lambda2 = lambda_partition(pair.unfolded)
    unfolded = pair.unfolded.kazhdan_degrees
    kept = [unfolded[i] for i in lambda0]
    report = Report(
        "fold",
        {
            "folded": pair.folded.name,
            "unfolded": pair.unfolded.name,
            "gamma0_order": pair.gamma0_order,
            "hypothesis": theorem_hypothesis(pair),
        },
    )
    report.add(f"kazhdan({pair.unfolded})", _multiset(unfolded))
    report.add("lambda2 degrees", _multiset(unfolded[i] for i in lambda2))
    report.add("lambda0 degrees", _multiset(kept), _multiset(pair.folded.kazhdan_degrees))
    report.add("|lambda0|", str(len(lambda0)), str(pair.folded.rank))
    return report
