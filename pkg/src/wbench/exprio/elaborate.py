"""Turn syntax trees into algebra elements.

:func:`elaborate` targets the free algebra of a Yangian (``Z^r`` expands to
the closed form of the central coefficient); :func:`elaborate_commutative`
targets a sympy polynomial ring. Results are not reduced.
"""

from collections.abc import Callable, Mapping
from typing import Optional

from sympy.polys.rings import PolyElement, PolyRing

from ..errors import ExprSyntaxError, InadmissibleGenerator, RewriteBudgetExceeded, UnknownAtom
from ..exactalg import Family, NCPolynomial, to_qq
from ..yangian import YangianAlgebra, central_element_closed_form
from .ast import (
    CENTRAL_ATOM,
    GENERATOR_ATOMS,
    Atom,
    Commutator,
    Expression,
    Neg,
    Number,
    Power,
    Product,
    Sum,
)


def _unknown(node: Atom, where: str) -> UnknownAtom:
    return UnknownAtom(f"{node.text} is not available in {where}", node.pos.line, node.pos.column)


def _letters(p: NCPolynomial) -> int:
    return sum(len(m.word) for m in p.monomials())


def elaborate(
    expr: Expression, algebra: YangianAlgebra, budget: Optional[int] = None
) -> NCPolynomial:
    """
    Evaluate ``expr`` in the free algebra of ``algebra``.

    Products and powers are expanded term by term; the letters written while
    doing so are charged against ``budget`` (default: the algebra's step
    budget), so an oversized power stops early instead of running unbounded.

    Raises:
        UnknownAtom: For commutative atoms (e_j, x_i, u, v, w).
        ExprSyntaxError: For generators outside the algebra's alphabet.
        RewriteBudgetExceeded: If the expansion writes more than ``budget``
            letters.
    """
    alphabet = algebra.alphabet
    budget = algebra.step_budget if budget is None else budget
    written = 0

    def multiply(a: NCPolynomial, b: NCPolynomial) -> NCPolynomial:
        nonlocal written
        written += len(b) * _letters(a) + len(a) * _letters(b)
        if written > budget:
            raise RewriteBudgetExceeded(written, budget)
        return a * b

    def visit(node: Expression) -> NCPolynomial:
        if isinstance(node, Number):
            return NCPolynomial.constant(node.value, alphabet)
        if isinstance(node, Atom):
            if node.name == CENTRAL_ATOM:
                return central_element_closed_form(algebra, node.index).as_polynomial
            if node.name in GENERATOR_ATOMS:
                try:
                    return algebra.generator(Family.parse(node.name), node.index)
                except InadmissibleGenerator as exc:
                    raise ExprSyntaxError(str(exc), node.pos.line, node.pos.column) from exc
            raise _unknown(node, "the Yangian")
        if isinstance(node, Neg):
            return -visit(node.operand)
        if isinstance(node, Sum):
            result = NCPolynomial.zero(alphabet)
            for term in node.terms:
                result = result + visit(term)
            return result
        if isinstance(node, Product):
            result = visit(node.factors[0])
            for factor in node.factors[1:]:
                result = multiply(result, visit(factor))
            return result
        if isinstance(node, Power):
            base = visit(node.base)
            if node.exponent == 0:
                return NCPolynomial.one(alphabet)
            result = base
            for _ in range(node.exponent - 1):
                result = multiply(result, base)
            return result
        if isinstance(node, Commutator):
            left, right = visit(node.left), visit(node.right)
            return multiply(left, right) - multiply(right, left)
        raise TypeError(f"not an expression node: {node!r}")

    return visit(expr)


def elaborate_commutative(
    expr: Expression,
    ring: PolyRing,
    bindings: Optional[Mapping[str, PolyElement]] = None,
    bracket: Optional[Callable[[PolyElement, PolyElement], PolyElement]] = None,
) -> PolyElement:
    """
    Evaluate ``expr`` in a commutative polynomial ring.

    Atoms are looked up in ``bindings`` by their printed name (``e_2``,
    ``u``) and then among the ring's variables. ``[a, b]`` evaluates to
    ``bracket(a, b)``, or to zero when no bracket is given.

    Raises:
        UnknownAtom: For atoms that are neither bound nor ring variables.
    """
    bindings = dict(bindings or {})
    variables = {str(symbol): gen for symbol, gen in zip(ring.symbols, ring.gens)}

    def visit(node: Expression) -> PolyElement:
        if isinstance(node, Number):
            return ring.ground_new(to_qq(node.value))
        if isinstance(node, Atom):
            name = node.text
            if name in bindings:
                return bindings[name]
            if name in variables:
                return variables[name]
            raise _unknown(node, f"the ring {', '.join(variables)}")
        if isinstance(node, Neg):
            return -visit(node.operand)
        if isinstance(node, Sum):
            return sum((visit(t) for t in node.terms), ring.zero)
        if isinstance(node, Product):
            result = ring.one
            for factor in node.factors:
                result *= visit(factor)
            return result
        if isinstance(node, Power):
            return visit(node.base) ** node.exponent
        if isinstance(node, Commutator):
            if bracket is None:
                return ring.zero
            return bracket(visit(node.left), visit(node.right))
        raise TypeError(f"not an expression node: {node!r}")

    return visit(expr)
