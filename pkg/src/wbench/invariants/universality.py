"""Which Slodowy slices fail to be universal Poisson deformations.

The exceptions are classified by the type of the Lie algebra and a coarse
orbit class: the regular orbit in every type, the subregular orbit in types
B, C, F and G, the orbits with two Jordan blocks in type C and the orbit of
dimension 8 in type G. Every other orbit gives a universal deformation.
"""

from enum import Enum
from typing import Union

from inflection import underscore

from ..errors import InconsistentQuery, InvalidArgument
from ..exprio.report import Report
from .dynkin import TYPES


class OrbitClass(Enum):
    REGULAR = "regular"
    SUBREGULAR = "subregular"
    TWO_JORDAN_BLOCKS_C = "two_jordan_blocks_c"
    DIM8_G = "dim8_g"
    OTHER = "other"

    @classmethod
    def parse(cls, value: Union[str, "OrbitClass"]) -> "OrbitClass":
        """Accept ``TwoJordanBlocks``, ``two-jordan-blocks-c``, ``Dim8G`` and so on."""
        if isinstance(value, OrbitClass):
            return value
        key = underscore(str(value).strip()).replace("-", "_").replace(" ", "_")
        aliases = {
            "two_jordan_blocks": cls.TWO_JORDAN_BLOCKS_C,
            "dim8": cls.DIM8_G,
            "dim_8": cls.DIM8_G,
            "dim_8_g": cls.DIM8_G,
            "dimension8": cls.DIM8_G,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError as exc:
            raise InvalidArgument(f"unknown orbit class {value!r}") from exc


_ROWS = {
    OrbitClass.REGULAR: ("any type", TYPES),
    OrbitClass.SUBREGULAR: ("types B, C, F, G", "BCFG"),
    OrbitClass.TWO_JORDAN_BLOCKS_C: ("type C", "C"),
    OrbitClass.DIM8_G: ("type G", "G"),
}

_ONLY_IN = {
    OrbitClass.TWO_JORDAN_BLOCKS_C: "C",
    OrbitClass.DIM8_G: "G",
}


def _normalize_type(type_name: str) -> str:
    letter = str(type_name).strip().upper()[:1]
    if not letter or letter not in TYPES:
        raise InvalidArgument(f"unknown simple type {type_name!r}")
    return letter


def universality_table(type_name: str, orbit_class: Union[str, OrbitClass]) -> bool:
    """
    Whether the slice to the orbit is a universal Poisson deformation.

    Args:
        type_name (str): A type letter; a rank suffix such as ``B3`` is ignored.
        orbit_class (str | OrbitClass): The orbit class.

    Raises:
        InconsistentQuery: For two Jordan blocks outside type C, or the
            dimension 8 orbit outside type G.
    """
    letter = _normalize_type(type_name)
    orbit_class = OrbitClass.parse(orbit_class)
    required = _ONLY_IN.get(orbit_class)
    if required is not None and letter != required:
        raise InconsistentQuery(letter, orbit_class.value)
    row = _ROWS.get(orbit_class)
    return row is None or letter not in row[1]


def table_row(type_name: str, orbit_class: Union[str, OrbitClass]) -> str:
    """The exception row that applies, or a note that none does."""
    letter = _normalize_type(type_name)
    orbit_class = OrbitClass.parse(orbit_class)
    if universality_table(letter, orbit_class):
        return f"no exception row covers type {letter}, {orbit_class.value} orbit"
    types, _ = _ROWS[orbit_class]
    return f"exception row: {types}, {orbit_class.value} orbit"


def universality_report(type_name: str, orbit_class: Union[str, OrbitClass]) -> Report:
    letter = _normalize_type(type_name)
    orbit_class = OrbitClass.parse(orbit_class)
    universal = universality_table(letter, orbit_class)
    report = Report("table1", {"type": letter, "orbit_class": orbit_class.value})
    report.add(
        f"{letter} {orbit_class.value}",
        "universal" if universal else "not universal",
    )
    report.add("row", table_row(letter, orbit_class))
    return report
