"""Exact rational scalars.

Every coefficient in the package is a :class:`fractions.Fraction`. Conversion
helpers to and from sympy's ``QQ`` domain live here so that the commutative
side (sympy rings) and the noncommutative side (plain dictionaries) agree on a
single scalar type.
"""

from fractions import Fraction
from math import comb
from typing import Any, Union

from sympy import QQ

from ..errors import InvalidArgument

ExactScalar = Fraction
ScalarLike = Union[int, Fraction]


def as_scalar(value: Any) -> Fraction:
    """
    Coerce a value to an exact rational.

    Args:
        value: An int, a Fraction, a string ``"p"`` or ``"p/q"``, or any
            exact rational exposing ``numerator`` and ``denominator``
            (sympy ``Rational``, ``QQ`` elements).

    Returns:
        Fraction: The value in lowest terms.

    Raises:
        InvalidArgument: For floats, booleans, decimal strings and anything
            else that is not an exact rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidArgument(f"not an exact scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise InvalidArgument(f"not an exact scalar: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"not an exact scalar: {value!r}") from exc
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is None or denominator is None:
        raise InvalidArgument(f"not an exact scalar: {value!r}")
    if callable(numerator):
        numerator, denominator = numerator(), denominator()
    return Fraction(int(numerator), int(denominator))


def binomial(n: int, k: int) -> Fraction:
    """
    Generalized binomial coefficient C(n, k).

    C(n, k) is 0 for k < 0 and for 0 <= n < k; for negative n the upper
    index is extended by C(n, k) = (-1)^k C(k - n - 1, k), so C(-1, 0) = 1.
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(comb(n, k)) if k <= n else Fraction(0)
    return Fraction((-1) ** k * comb(k - n - 1, k))


def to_qq(value: ScalarLike) -> Any:
    """Convert an exact scalar to an element of sympy's ``QQ``."""
    value = as_scalar(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value: Any) -> Fraction:
    """Convert a ``QQ`` (or ``ZZ``) domain element back to a Fraction."""
    return as_scalar(value)


def format_scalar(value: ScalarLike) -> str:
    """Render a scalar as ``p`` or ``p/q``."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
