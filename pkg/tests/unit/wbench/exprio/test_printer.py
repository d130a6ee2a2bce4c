from fractions import Fraction

import pytest
from sympy import QQ
from wbench.exactalg import Alphabet, Family, Generator, NCPolynomial
from wbench.exprio import (
    format_cpolynomial,
    format_expression,
    format_ncpolynomial,
    parse,
    render,
)
from wbench.invariants import SymmetricContext

ALPHABET = Alphabet.for_rank(2)


def letter(family: Family, superscript: int) -> NCPolynomial:
    return NCPolynomial.generator(Generator(family, superscript), ALPHABET)


class TestFormatNCPolynomial:
    def test_degree_then_order(self):
        """Higher degree first; constants last with their sign."""
        p = letter(Family.D2, 1) + letter(Family.D1, 1) - 3
        assert format_ncpolynomial(p) == "D1^1 + D2^1 - 3"

    def test_coefficients(self):
        """Unit coefficients are omitted; fractions print as p/q."""
        p = -letter(Family.F, 1) * letter(Family.E, 3) + Fraction(1, 2) * letter(Family.D2, 2)
        assert format_ncpolynomial(p) == "-F^1 * E^3 + 1/2 * D2^2"

    def test_zero(self):
        assert format_ncpolynomial(NCPolynomial.zero(ALPHABET)) == "0"
        assert str(NCPolynomial.constant(Fraction(-2, 3))) == "-2/3"


class TestFormatCPolynomial:
    def test_graded(self):
        """Total degree first, then by exponent vector."""
        x1, x2, _ = SymmetricContext(2).ring.gens
        assert format_cpolynomial(x1 * x2 + x1**2 - 1) == "x_1^2 + x_1 * x_2 - 1"

    def test_rational_and_negative(self):
        x1, x2, x3 = SymmetricContext(2).ring.gens
        p = -x3 + QQ(1, 2) * x2
        assert format_cpolynomial(p) == "1/2 * x_2 - x_3"
        assert format_cpolynomial(x1 - x1) == "0"


class TestFormatExpression:
    @pytest.mark.parametrize(
        "text",
        [
            "D1^1 + D2^1 - 3",
            "-(D1^1 + D2^1)",
            "-(D1^1 * D2^1)",
            "(D1^1 * D2^1) * E^3",
            "D1^1 - (D2^1 - F^1)",
            "(D1^1 + D2^1) + F^1",
            "(1/2)^2",
            "3^2",
            "(-F^1)^2",
            "E^3^2",
            "[E^3, F^1]",
            "1/2 * [E^3, -F^1] - -D1^1",
            "e_2 * x_1 + u * v - w^3",
        ],
    )
    def test_canonical_text_is_stable(self, text):
        """Canonical text prints back to itself."""
        assert format_expression(parse(text)) == text

    @pytest.mark.parametrize(
        "text, printed",
        [
            ("  D1^1*D2^1", "D1^1 * D2^1"),
            ("2/4", "1/2"),
            ("((E^3))", "E^3"),
            ("D1^1 + -D2^1", "D1^1 - D2^1"),
        ],
    )
    def test_normalizes_layout(self, text, printed):
        assert format_expression(parse(text)) == printed

    def test_render_dispatch(self):
        """render picks the printer by value type."""
        x1 = SymmetricContext(2).ring.gens[0]
        assert render(parse("F^1*E^3")) == "F^1 * E^3"
        assert render(letter(Family.F, 1)) == "F^1"
        assert render(x1**2) == "x_1^2"

    def test_rejects_other_values(self):
        with pytest.raises(TypeError):
            format_expression("D1^1")
