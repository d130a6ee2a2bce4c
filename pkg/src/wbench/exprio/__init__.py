"""Expression grammar, parser, printer and the JSON report schema.

:mod:`wbench.exprio.elaborate` depends on the Yangian and is imported
directly by its users.
"""

from .ast import Atom, Commutator, Expression, Neg, Number, Position, Power, Product, Sum
from .parser import Parser, parse
from .printer import format_cpolynomial, format_expression, format_ncpolynomial, render
from .report import Report, Status, Witness

__all__ = [
    "Atom",
    "Commutator",
    "Expression",
    "Neg",
    "Number",
    "Parser",
    "Position",
    "Power",
    "Product",
    "Report",
    "Status",
    "Sum",
    "Witness",
    "format_cpolynomial",
    "format_expression",
    "format_ncpolynomial",
    "parse",
    "render",
]
