"""Commutative polynomials over Q.

Commutative polynomials are sympy ``PolyElement`` values in a ``PolyRing``
over ``QQ``. This module only adds the small amount of glue the rest of the
package needs: cached ring construction, Fraction-valued coefficient access
and conversions between rings that share variable names.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from sympy import QQ
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import InvalidArgument
from .scalars import from_qq

CPolynomial = PolyElement


@lru_cache(maxsize=None)
def rational_ring(names: tuple[str, ...]) -> PolyRing:
    """
    Return the polynomial ring Q[names] (cached per name tuple).

    Args:
        names (tuple[str, ...]): Variable names, in ring order.

    Returns:
        PolyRing: The ring, with lexicographic monomial order.
    """
    if not names:
        raise InvalidArgument("a polynomial ring needs at least one variable")
    return PolyRing(list(names), QQ)


def coefficients(p: CPolynomial) -> list[tuple[tuple[int, ...], Fraction]]:
    """Terms of ``p`` as (exponent vector, Fraction), in the ring's order."""
    return [(monom, from_qq(coeff)) for monom, coeff in p.terms()]


def is_homogeneous(p: CPolynomial, degree: int, weights: Sequence[int] = None) -> bool:
    """True when every term of ``p`` has (weighted) degree ``degree``."""
    for monom, _ in p.terms():
        if weights is None:
            value = sum(monom)
        else:
            value = sum(w * e for w, e in zip(weights, monom))
        if value != degree:
            return False
    return True


def ring_names(ring: PolyRing) -> tuple[str, ...]:
    return tuple(str(symbol) for symbol in ring.symbols)


def transfer(p: CPolynomial, target: PolyRing) -> CPolynomial:
    """
    Move ``p`` into ``target`` by variable name.

    Raises:
        InvalidArgument: If ``p`` uses a variable ``target`` lacks.
    """
    source_names = ring_names(p.ring)
    target_index = {name: i for i, name in enumerate(ring_names(target))}
    terms = {}
    for monom, coeff in p.terms():
        exponents = [0] * target.ngens
        for name, exponent in zip(source_names, monom):
            if not exponent:
                continue
            if name not in target_index:
                raise InvalidArgument(f"variable {name} is not in the target ring")
            exponents[target_index[name]] = exponent
        terms[tuple(exponents)] = coeff
    return target.from_dict(terms)
