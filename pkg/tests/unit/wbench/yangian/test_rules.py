from fractions import Fraction
from pathlib import Path

import pytest
from wbench.errors import RuleTableError
from wbench.exactalg import Alphabet, Family, Generator, NCMonomial, NCPolynomial
from wbench.utils import get_default_rule_file
from wbench.yangian import RelationTable, load_rule_file, parse_rule_text
from wbench.yangian.series import DSeries

ALPHABET = Alphabet.for_rank(2)


def make_table(templates) -> RelationTable:
    series = DSeries(8)
    return RelationTable(
        templates, ALPHABET, lambda i, t: series.to_nc(series.inverse(i, t), ALPHABET)
    )


def word(*letters: tuple[str, int], coefficient=1) -> NCPolynomial:
    return NCPolynomial.from_word(
        [Generator(Family.parse(f), r) for f, r in letters], coefficient, ALPHABET
    )


@pytest.fixture(scope="module")
def table() -> RelationTable:
    return make_table(load_rule_file(get_default_rule_file()))


class TestRuleParsing:
    def test_shipped_file_parses(self):
        """The shipped rule file has ten relations, two of them differences."""
        templates = load_rule_file(get_default_rule_file())
        assert len(templates) == 10
        assert sum(t.is_difference for t in templates) == 2

    def test_summation_and_fraction(self):
        """Fractions, sums and affine superscripts are read."""
        (template,) = parse_rule_text("[D1^r, E^s] -> 1/2 * sum(t=0..r-1) D1^t * E^(r+s-1-t)")
        (term,) = template.rhs
        assert term.coefficient == Fraction(1, 2)
        assert term.summation[0] == "t"
        assert template.families == (Family.D1, Family.E)

    def test_error_carries_line(self):
        """A malformed line is reported with its number."""
        with pytest.raises(RuleTableError) as exc_info:
            parse_rule_text("# format: 1\n[D1^r, D1^s] -> 0\n[D1^r, Q^s] -> 0\n")
        assert exc_info.value.line == 3
        assert "unknown generator 'Q'" in str(exc_info.value)

    def test_unsupported_format(self):
        """Only format version 1 is understood."""
        with pytest.raises(RuleTableError, match="unsupported rule file format"):
            parse_rule_text("# format: 2\n[D1^r, D1^s] -> 0\n")

    def test_empty_file(self):
        """A file without relations is an error."""
        with pytest.raises(RuleTableError, match="no relations"):
            parse_rule_text("# nothing here\n\n")

    def test_missing_file(self, tmp_path: Path):
        """Unreadable files raise RuleTableError."""
        with pytest.raises(RuleTableError, match="cannot read rule file"):
            load_rule_file(tmp_path / "absent.rules")

    def test_duplicate_relation(self):
        """Two templates for the same pair are refused."""
        templates = parse_rule_text("[D1^r, D2^s] -> 0\n[D2^r, D1^s] -> 0\n")
        with pytest.raises(RuleTableError, match="duplicate"):
            make_table(templates)


class TestRelationTable:
    def test_e_f_bracket(self, table: RelationTable):
        """[E^3, F^1] is the u^-3 coefficient of -D1(u)^-1 D2(u)."""
        expected = (
            -word(("D2", 3))
            + word(("D1", 1), ("D2", 2))
            - word(("D1", 1), ("D1", 1), ("D2", 1))
            + word(("D1", 2), ("D2", 1))
            + word(("D1", 1), ("D1", 1), ("D1", 1))
            - word(("D1", 1), ("D1", 2), coefficient=2)
            + word(("D1", 3))
        )
        assert table.commutator(Generator(Family.E, 3), Generator(Family.F, 1)) == expected

    def test_reverse_orientation(self, table: RelationTable):
        """[y, x] = -[x, y] when only [x, y] is tabulated."""
        e, d = Generator(Family.E, 3), Generator(Family.D1, 1)
        assert table.commutator(e, d) == -word(("E", 3))
        assert table.commutator(d, e) == word(("E", 3))

    def test_difference_relations(self, table: RelationTable):
        """E-E and F-F brackets are solved from the difference templates."""
        assert table.commutator(Generator(Family.E, 4), Generator(Family.E, 3)) == -word(
            ("E", 3), ("E", 3)
        )
        assert table.commutator(Generator(Family.F, 2), Generator(Family.F, 1)) == word(
            ("F", 1), ("F", 1)
        )

    def test_diagonal_vanishes(self, table: RelationTable):
        """[x, x] = 0."""
        g = Generator(Family.E, 5)
        assert table.commutator(g, g).is_zero()

    def test_uncovered_pair(self):
        """A table without an F-F relation cannot reorder F's."""
        shipped = load_rule_file(get_default_rule_file())
        partial = make_table([t for t in shipped if t.families != (Family.F, Family.F)])
        with pytest.raises(RuleTableError, match="no relation covers"):
            partial.commutator(Generator(Family.F, 2), Generator(Family.F, 1))

    def test_rules_decrease(self, table: RelationTable):
        """Every replacement word is smaller than its pattern."""
        rules = table.rules_up_to(7)
        assert rules
        for rule in rules:
            pattern = NCMonomial(rule.pattern).sort_key()
            assert rule.pattern[0] > rule.pattern[1]
            for monomial in rule.replacement.monomials():
                assert monomial.sort_key() < pattern
