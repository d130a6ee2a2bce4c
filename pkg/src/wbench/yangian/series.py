"""The commutative D-subalgebra and its generating series.

D-generators commute with one another, so every series coefficient built only
from D1^(r) and D2^(r) (D-inverse coefficients, the shifted series D2(u-1),
the central series Z(u)) is computed in a sympy polynomial ring over QQ with
variables ``D1_1 .. D1_K, D2_1 .. D2_K`` and converted to the free algebra at
the end, with its letters in PBW order.
"""

from functools import lru_cache

from sympy.polys.rings import PolyRing

from ..errors import InvalidArgument, SeriesCapacityExceeded
from ..exactalg import (
    Alphabet,
    CPolynomial,
    Family,
    Generator,
    NCMonomial,
    NCPolynomial,
    binomial,
    from_qq,
    rational_ring,
    to_qq,
)

_FAMILIES = (Family.D1, Family.D2)


def d_variable_names(series_order: int) -> tuple[str, ...]:
    return tuple(
        f"{family.name}_{r}" for family in _FAMILIES for r in range(1, series_order + 1)
    )


@lru_cache(maxsize=None)
def d_ring(series_order: int) -> PolyRing:
    """Q[D1_1..D1_K, D2_1..D2_K] for K = ``series_order``."""
    if series_order < 1:
        raise InvalidArgument("series order must be positive")
    return rational_ring(d_variable_names(series_order))


class DSeries:
    """
    Coefficients of D1(u), D2(u) and the series derived from them.

    Args:
        series_order (int): Largest superscript available in the ring.
    """

    def __init__(self, series_order: int):
        self.series_order = series_order
        self.ring = d_ring(series_order)
        self._inverse: dict[tuple[int, int], CPolynomial] = {}

    def _check(self, r: int):
        if r > self.series_order:
            raise SeriesCapacityExceeded(r, self.series_order)

    def coefficient(self, i: int, r: int) -> CPolynomial:
        """D_i^(r), with D_i^(0) = 1 and D_i^(r) = 0 for r < 0."""
        if i not in (1, 2):
            raise InvalidArgument(f"D-family index must be 1 or 2, got {i}")
        if r < 0:
            return self.ring.zero
        if r == 0:
            return self.ring.one
        self._check(r)
        return self.ring.gens[(i - 1) * self.series_order + r - 1]

    def inverse(self, i: int, t: int) -> CPolynomial:
        """
        The u^-t coefficient of D_i(u)^-1.

        Defined by the convolution recursion sum_{s=0}^{t} D_i^(s) Dinv_i^(t-s)
        = delta_{t,0}.
        """
        if t < 0:
            raise InvalidArgument(f"t must be non-negative, got {t}")
        key = (i, t)
        if key not in self._inverse:
            if t == 0:
                value = self.ring.one
            else:
                value = self.ring.zero
                for s in range(1, t + 1):
                    value -= self.coefficient(i, s) * self.inverse(i, t - s)
            self._inverse[key] = value
        return self._inverse[key]

    def shifted_d2(self, r: int) -> CPolynomial:
        """
        The u^-r coefficient of D2(u-1): sum_{s=0}^{r} C(r-1, r-s) D2^(s).

        Returns 0 for r = -1.
        """
        if r < -1:
            raise InvalidArgument(f"r must be at least -1, got {r}")
        if r == -1:
            return self.ring.zero
        value = self.ring.zero
        for s in range(r + 1):
            c = binomial(r - 1, r - s)
            if c:
                value += to_qq(c) * self.coefficient(2, s)
        return value

    def determinant(self, s: int) -> CPolynomial:
        """C^(s), the u^-s coefficient of D1(u) D2(u-1)."""
        value = self.ring.zero
        for t in range(s + 1):
            value += self.coefficient(1, t) * self.shifted_d2(s - t)
        return value

    def to_nc(self, p: CPolynomial, alphabet: Alphabet = None) -> NCPolynomial:
        """Write a D-ring element as an ordered word combination in the free algebra."""
        order = self.series_order
        terms = {}
        for monom, coeff in p.terms():
            word = []
            for index, exponent in enumerate(monom):
                family = _FAMILIES[index // order]
                word.extend([Generator(family, index % order + 1)] * exponent)
            terms[NCMonomial(tuple(word))] = from_qq(coeff)
        return NCPolynomial(terms, alphabet)

    def central(self, n: int, r: int, printed: bool = False) -> CPolynomial:
        """
        Closed form of the u^(2n-r) coefficient of u(u-1)^(2n-1) D1(u) D2(u-1).

        The coefficient is sum_s C(2n-1, 2n-1-r+s) (-1)^(r-s) C^(s). With
        ``printed`` the index is not offset by r, giving
        sum_s C(2n-1, 2n-1-s) (-1)^s C^(s) instead; that variant does not
        match the series and is kept only to demonstrate the mismatch.
        """
        if r < 0:
            raise InvalidArgument(f"r must be non-negative, got {r}")
        value = self.ring.zero
        for s in range(r + 1):
            if printed:
                c = binomial(2 * n - 1, 2 * n - 1 - s) * (-1) ** ((2 * n - s) % 2)
            else:
                c = binomial(2 * n - 1, 2 * n - 1 - r + s) * (-1) ** ((2 * n - r + s) % 2)
            if c:
                value += to_qq(c) * self.determinant(s)
        return value
