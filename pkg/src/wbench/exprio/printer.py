"""Canonical text for expressions and polynomials.

Every string produced here parses back (with :func:`wbench.exprio.parser.parse`)
to an equal value. Polynomial terms are printed highest degree first, ties
broken by the monomial order.
"""

from typing import Union

from sympy.polys.rings import PolyElement

from ..exactalg import NCMonomial, NCPolynomial, format_scalar, from_qq
from .ast import Atom, Commutator, Expression, Neg, Number, Power, Product, Sum


def _join_terms(terms: list[tuple[bool, str]]) -> str:
    """Join (negative, body) pairs as ``a + b - c``."""
    if not terms:
        return "0"
    parts = []
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def _term_body(coefficient, factors: list[str]) -> str:
    magnitude = abs(coefficient)
    if not factors:
        return format_scalar(magnitude)
    word = " * ".join(factors)
    if magnitude == 1:
        return word
    return f"{format_scalar(magnitude)} * {word}"


def _nc_key(monomial: NCMonomial) -> tuple:
    degree, families, superscripts = monomial.sort_key()
    return (-degree, families, superscripts)


def format_ncpolynomial(p: NCPolynomial) -> str:
    """E.g. ``D1^1 + D2^1 - 3``; the zero polynomial prints as ``0``."""
    terms = []
    for monomial in sorted(p.monomials(), key=_nc_key):
        coefficient = p.coefficient(monomial)
        body = _term_body(coefficient, [str(g) for g in monomial])
        terms.append((coefficient < 0, body))
    return _join_terms(terms)


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def format_cpolynomial(p: PolyElement) -> str:
    """E.g. ``x_1^2 + x_1 * x_2 - 1``, graded by total degree."""
    names = [str(symbol) for symbol in p.ring.symbols]
    terms = []
    for monom, coeff in sorted(p.terms(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
        coefficient = from_qq(coeff)
        factors = [_power(names[i], e) for i, e in enumerate(monom) if e]
        terms.append((coefficient < 0, _term_body(coefficient, factors)))
    return _join_terms(terms)


def _wrap(text: str) -> str:
    return f"({text})"


def format_expression(node: Expression) -> str:
    """Print a syntax tree with the fewest parentheses that preserve its shape."""
    if isinstance(node, Number):
        return format_scalar(node.value)
    if isinstance(node, Atom):
        return node.text
    if isinstance(node, Neg):
        inner = format_expression(node.operand)
        if isinstance(node.operand, (Sum, Product)):
            inner = _wrap(inner)
        return f"-{inner}"
    if isinstance(node, Sum):
        parts = []
        for i, term in enumerate(node.terms):
            if i > 0 and isinstance(term, Neg):
                body = format_expression(term.operand)
                if isinstance(term.operand, Sum):
                    body = _wrap(body)
                parts.append(f" - {body}")
                continue
            body = format_expression(term)
            if isinstance(term, Sum):
                body = _wrap(body)
            parts.append(body if i == 0 else f" + {body}")
        return "".join(parts)
    if isinstance(node, Product):
        factors = []
        for factor in node.factors:
            text = format_expression(factor)
            factors.append(_wrap(text) if isinstance(factor, (Sum, Product)) else text)
        return " * ".join(factors)
    if isinstance(node, Power):
        base = format_expression(node.base)
        simple = isinstance(node.base, (Atom, Commutator, Power)) or (
            isinstance(node.base, Number) and node.base.value.denominator == 1
        )
        return f"{base if simple else _wrap(base)}^{node.exponent}"
    if isinstance(node, Commutator):
        return f"[{format_expression(node.left)}, {format_expression(node.right)}]"
    raise TypeError(f"not an expression node: {node!r}")


def render(value: Union[Expression, NCPolynomial, PolyElement]) -> str:
    """Canonical text of an expression tree, a free-algebra element or a commutative polynomial."""
    if isinstance(value, NCPolynomial):
        return format_ncpolynomial(value)
    if isinstance(value, PolyElement):
        return format_cpolynomial(value)
    return format_expression(value)
