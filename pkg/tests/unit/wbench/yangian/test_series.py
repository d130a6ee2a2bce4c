import pytest
from wbench.errors import InvalidArgument, SeriesCapacityExceeded
from wbench.exactalg import Alphabet, Family, Generator, NCMonomial
from wbench.yangian import DSeries
from wbench.yangian.series import d_variable_names


@pytest.fixture(scope="module")
def series() -> DSeries:
    return DSeries(6)


def var(series: DSeries, name: str):
    return series.ring.gens[d_variable_names(series.series_order).index(name)]


class TestDSeries:
    def test_coefficients(self, series: DSeries):
        """D_i^(0) = 1 and negative superscripts vanish."""
        assert series.coefficient(1, 0) == 1
        assert series.coefficient(2, -1) == 0
        assert series.coefficient(2, 3) == var(series, "D2_3")

    def test_capacity(self, series: DSeries):
        """Superscripts beyond the series order are refused."""
        with pytest.raises(SeriesCapacityExceeded, match="capacity") as exc_info:
            series.coefficient(1, 7)
        assert (exc_info.value.required, exc_info.value.capacity) == (7, series.series_order)
        with pytest.raises(InvalidArgument):
            series.coefficient(3, 1)

    def test_inverse(self, series: DSeries):
        """The inverse series satisfies the convolution recursion."""
        d1, d2 = var(series, "D1_1"), var(series, "D1_2")
        assert series.inverse(1, 0) == 1
        assert series.inverse(1, 1) == -d1
        assert series.inverse(1, 2) == d1**2 - d2
        for t in range(1, 6):
            total = sum(
                (series.coefficient(1, s) * series.inverse(1, t - s) for s in range(t + 1)),
                series.ring.zero,
            )
            assert total == 0

    def test_shifted_d2(self, series: DSeries):
        """D2(u-1) expands with (u-1)^-k = sum C(m-1, k-1) u^-m."""
        assert series.shifted_d2(-1) == 0
        assert series.shifted_d2(0) == 1
        assert series.shifted_d2(1) == var(series, "D2_1")
        assert series.shifted_d2(2) == var(series, "D2_1") + var(series, "D2_2")
        assert series.shifted_d2(3) == (
            var(series, "D2_1") + 2 * var(series, "D2_2") + var(series, "D2_3")
        )

    def test_central_low_coefficients(self, series: DSeries):
        """Z^0 = 1 and Z^1 = D1^1 + D2^1 - 3 for n = 2."""
        assert series.central(2, 0) == 1
        assert series.central(2, 1) == var(series, "D1_1") + var(series, "D2_1") - 3

    def test_printed_variant(self, series: DSeries):
        """Without the index offset the n = 2, r = 1 coefficient is 1 - 3 C^1."""
        c1 = var(series, "D1_1") + var(series, "D2_1")
        assert series.central(2, 1, printed=True) == 1 - 3 * c1

    def test_to_nc_orders_letters(self, series: DSeries):
        """Commutative monomials become ordered words."""
        p = var(series, "D2_1") * var(series, "D1_2") * var(series, "D1_1")
        nc = series.to_nc(p, Alphabet.for_rank(2))
        (monomial,) = nc.monomials()
        assert monomial == NCMonomial(
            (Generator(Family.D1, 1), Generator(Family.D1, 2), Generator(Family.D2, 1))
        )
