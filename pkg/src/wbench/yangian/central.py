"""Central elements Z^(r) of Y_2(sigma).

The central series is Z(u) = u(u-1)^(2n-1) D1(u) D2(u-1) = sum_r Z^(r) u^(2n-r).
Two independent computations are provided: :func:`central_series_expand`
multiplies the power series out with sympy's ``ring_series`` and serves as the
oracle, and :func:`central_element_closed_form` evaluates the binomial
closed form.
"""

import logging
from dataclasses import dataclass

from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion

from ..errors import InvalidArgument, SeriesCapacityExceeded
from ..exactalg import CPolynomial, NCPolynomial, rational_ring, transfer
from .algebra import YangianAlgebra
from .series import d_variable_names

logger = logging.getLogger(__name__)

SERIES = "series"
CLOSED_FORM = "closed_form"
PRINTED = "printed"


@dataclass(frozen=True)
class CentralElement:
    """
    The coefficient Z^(r) of the central series.

    Attributes:
        r (int): The index; Z^(0) = 1.
        commutative (CPolynomial): Z^(r) in the commutative D-ring.
        as_polynomial (NCPolynomial): The same element as ordered D-words.
        source (str): ``series``, ``closed_form`` or ``printed``.
    """

    r: int
    commutative: CPolynomial
    as_polynomial: NCPolynomial
    source: str = CLOSED_FORM

    def __str__(self):
        return f"Z^{self.r} = {self.as_polynomial}"


def d_inverse_coeff(alg: YangianAlgebra, i: int, t: int) -> CPolynomial:
    """The u^-t coefficient of D_i(u)^-1 in the D-ring."""
    return alg.series.inverse(i, t)


def shifted_d2_coeff(alg: YangianAlgebra, r: int) -> CPolynomial:
    """The u^-r coefficient of D2(u-1); zero for r = -1."""
    return alg.series.shifted_d2(r)


def _element(alg: YangianAlgebra, r: int, value: CPolynomial, source: str) -> CentralElement:
    return CentralElement(r, value, alg.series.to_nc(value, alg.alphabet), source)


def central_series_expand(alg: YangianAlgebra, r_max: int) -> list[CentralElement]:
    """
    Z^(0) .. Z^(r_max) read off the expanded central series.

    With x = u^-1 the series is Z(u) = u^(2n) (1-x)^(2n-1) D1(x) D2(u-1),
    where (u-1)^-k = x^k (1-x)^-k. The product is truncated at x^(r_max+1)
    and the coefficient of x^r is Z^(r).
    """
    if r_max < 0:
        raise InvalidArgument(f"r_max must be non-negative, got {r_max}")
    order = alg.series.series_order
    if r_max > order:
        raise SeriesCapacityExceeded(r_max, order)
    ring = rational_ring(("x",) + d_variable_names(order))
    x = ring.gens[0]
    d1 = ring.gens[1 : order + 1]
    d2 = ring.gens[order + 1 :]
    prec = r_max + 1

    d1_series = ring.one + sum((d1[k - 1] * x**k for k in range(1, prec)), ring.zero)
    geometric = rs_series_inversion(ring.one - x, x, prec)
    d2_shifted = ring.one
    for k in range(1, prec):
        d2_shifted += d2[k - 1] * rs_mul(x**k, rs_pow(geometric, k, x, prec), x, prec)
    prefactor = rs_pow(ring.one - x, 2 * alg.n - 1, x, prec)
    z = rs_mul(prefactor, rs_mul(d1_series, d2_shifted, x, prec), x, prec)

    target = alg.series.ring
    elements = []
    for r in range(prec):
        coefficient = z.coeff_wrt(x, r)
        elements.append(_element(alg, r, transfer(coefficient, target), SERIES))
    logger.debug("expanded the central series of n=%d up to r=%d", alg.n, r_max)
    return elements


def central_element_closed_form(
    alg: YangianAlgebra, r: int, printed: bool = False
) -> CentralElement:
    """
    Z^(r) from the binomial closed form.

    ``printed=True`` evaluates the variant without the index offset in the
    binomial, which is central but is not the coefficient of the series.
    """
    value = alg.series.central(alg.n, r, printed=printed)
    return _element(alg, r, value, PRINTED if printed else CLOSED_FORM)
