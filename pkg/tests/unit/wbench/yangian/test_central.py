import pytest
from wbench.errors import InvalidArgument
from wbench.yangian import (
    YangianAlgebra,
    central_element_closed_form,
    central_series_expand,
    d_inverse_coeff,
    shifted_d2_coeff,
)
from wbench.yangian.central import CLOSED_FORM, PRINTED, SERIES


class TestCentralSeries:
    @pytest.mark.parametrize("algebra", ["full2", "full3"])
    def test_closed_form_matches_series(self, algebra, request):
        """The closed form equals the series coefficient for r <= 6."""
        alg: YangianAlgebra = request.getfixturevalue(algebra)
        for element in central_series_expand(alg, 6):
            closed = central_element_closed_form(alg, element.r)
            assert closed.commutative == element.commutative
            assert closed.as_polynomial == element.as_polynomial
            assert element.source == SERIES
            assert closed.source == CLOSED_FORM

    def test_low_coefficients(self, full2: YangianAlgebra, full3: YangianAlgebra):
        """Z^0 = 1 and Z^1 = D1^1 + D2^1 - (2n - 1)."""
        assert str(central_series_expand(full3, 0)[0].as_polynomial) == "1"
        z1 = central_series_expand(full2, 1)[1]
        assert str(z1.as_polynomial) == "D1^1 + D2^1 - 3"
        assert str(z1) == "Z^1 = D1^1 + D2^1 - 3"

    def test_printed_form_disagrees(self, full2: YangianAlgebra):
        """The form without the index offset differs from the series at r = 1."""
        oracle = central_series_expand(full2, 1)
        printed = central_element_closed_form(full2, 1, printed=True)
        assert printed.source == PRINTED
        assert printed.commutative != oracle[1].commutative
        assert printed.as_polynomial.constant_term() == 1
        assert oracle[1].as_polynomial.constant_term() == -3
        assert central_element_closed_form(full2, 0, printed=True).commutative == 1

    @pytest.mark.parametrize("r_max", [-1, 25])
    def test_range_checked(self, full2: YangianAlgebra, r_max):
        """r_max must lie between 0 and the D-ring capacity."""
        with pytest.raises(InvalidArgument):
            central_series_expand(full2, r_max)


class TestSeriesCoefficients:
    def test_d_inverse(self, full2: YangianAlgebra):
        """Dinv_i^(1) = -D_i^(1)."""
        assert d_inverse_coeff(full2, 1, 1) == -full2.series.coefficient(1, 1)
        assert d_inverse_coeff(full2, 2, 0) == 1

    def test_shifted_d2(self, full2: YangianAlgebra):
        """D2(u-1) has u^-1 coefficient D2^1 and no u^1 term."""
        assert shifted_d2_coeff(full2, -1) == 0
        assert shifted_d2_coeff(full2, 1) == full2.series.coefficient(2, 1)
