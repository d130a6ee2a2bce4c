from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from wbench.constants import MAX_EXPONENT, MAX_NESTING_DEPTH
from wbench.errors import ExprSyntaxError, UnknownAtom
from wbench.exprio import (
    Atom,
    Commutator,
    Neg,
    Number,
    Power,
    Product,
    Sum,
    format_expression,
    parse,
)


class TestParse:
    def test_atoms(self):
        """Generator, central and commutative atoms."""
        assert parse("D1^3") == Atom("D1", 3)
        assert parse("Z^2") == Atom("Z", 2)
        assert parse("e_4") == Atom("e", 4)
        assert parse("x_1") == Atom("x", 1)
        assert parse("w") == Atom("w")

    def test_precedence(self):
        """'^' binds tighter than '*', which binds tighter than '+'."""
        tree = parse("1 + 2 * E^3^2")
        assert tree == Sum(
            (Number(Fraction(1)), Product((Number(Fraction(2)), Power(Atom("E", 3), 2))))
        )

    def test_subtraction_and_unary_minus(self):
        """a - b is a sum with a negated term; unary minus nests."""
        assert parse("D1^1 - 3") == Sum((Atom("D1", 1), Neg(Number(Fraction(3)))))
        assert parse("--F^1") == Neg(Neg(Atom("F", 1)))

    def test_fraction_and_commutator(self):
        """p/q literals and brackets."""
        tree = parse("1/2 * [E^3, F^1]")
        assert tree == Product((Number(Fraction(1, 2)), Commutator(Atom("E", 3), Atom("F", 1))))

    def test_positions_not_compared(self):
        """Whitespace does not change the tree."""
        assert parse(" D1^1*D2^1 ") == parse("D1^1 * D2^1")

    def test_bytes(self):
        """UTF-8 bytes are accepted."""
        assert parse(b"F^2") == Atom("F", 2)


class TestParseErrors:
    def test_e_threshold(self):
        """E superscripts must exceed 2n - 2 when n is known."""
        with pytest.raises(ExprSyntaxError, match="E superscript must exceed 2n-2 = 2, got E\\^2"):
            parse("E^2", n=2)
        assert parse("E^2") == Atom("E", 2)

    def test_zero_superscript(self):
        """Superscripts start at one; Z^0 is allowed."""
        with pytest.raises(ExprSyntaxError):
            parse("D1^0")
        assert parse("Z^0") == Atom("Z", 0)

    def test_unknown_atom(self):
        """Unknown identifiers raise UnknownAtom with a position."""
        with pytest.raises(UnknownAtom) as exc_info:
            parse("D1^1 + G^2")
        assert (exc_info.value.line, exc_info.value.column) == (1, 8)

    @pytest.mark.parametrize(
        "text", ["", "1 +", "(E^3", "[E^3 F^1]", "D1", "1/0", "E^3 E^4", "x_0", "2^-1", "1.5"]
    )
    def test_malformed(self, text):
        """Malformed input raises ExprSyntaxError."""
        with pytest.raises(ExprSyntaxError):
            parse(text)

    def test_invalid_utf8(self):
        """Undecodable bytes are a syntax error, not a crash."""
        with pytest.raises(ExprSyntaxError, match="UTF-8"):
            parse(b"\xff\xfe")

    def test_nesting_limit(self):
        """Nesting up to the limit parses; one more level does not."""
        depth = MAX_NESTING_DEPTH
        assert parse("(" * depth + "1" + ")" * depth) == Number(Fraction(1))
        with pytest.raises(ExprSyntaxError, match="nesting deeper"):
            parse("(" * (depth + 1) + "1" + ")" * (depth + 1))
        with pytest.raises(ExprSyntaxError, match="nesting deeper"):
            parse("-" * (depth + 1) + "1")

    def test_long_literal(self):
        """Absurdly long integers are rejected cleanly."""
        with pytest.raises(ExprSyntaxError):
            parse("D1^" + "9" * 10000)

    def test_exponent_limit(self):
        """Exponents up to the limit parse; larger ones point at the exponent."""
        assert parse(f"D1^1^{MAX_EXPONENT}") == Power(Atom("D1", 1), MAX_EXPONENT)
        with pytest.raises(ExprSyntaxError, match="exponent exceeds") as exc_info:
            parse(f"(E^3 + F^1)^{MAX_EXPONENT + 1}")
        assert exc_info.value.column == 13
        with pytest.raises(ExprSyntaxError, match="exponent exceeds"):
            parse("2^" + "9" * 500)


class TestFuzz:
    @settings(max_examples=10000)
    @given(st.binary(max_size=40))
    def test_random_bytes_never_crash(self, data):
        """Arbitrary bytes either parse or raise ExprSyntaxError."""
        try:
            tree = parse(data, n=2)
        except ExprSyntaxError:
            return
        assert parse(format_expression(tree), n=2) == tree

    @settings(max_examples=500)
    @given(
        st.text(
            alphabet=st.sampled_from(list("DEFZ12345^*+-/[], ()exuvw_")),
            max_size=30,
        )
    )
    def test_grammar_shaped_text(self, text):
        """Text over the grammar's own alphabet never escapes as another error."""
        try:
            tree = parse(text)
        except ExprSyntaxError:
            return
        assert parse(format_expression(tree)) == tree
