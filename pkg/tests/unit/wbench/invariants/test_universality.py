import pytest
from wbench.errors import InconsistentQuery, InvalidArgument
from wbench.invariants import OrbitClass, table_row, universality_report, universality_table


class TestOrbitClass:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("Regular", OrbitClass.REGULAR),
            ("subregular", OrbitClass.SUBREGULAR),
            ("TwoJordanBlocks", OrbitClass.TWO_JORDAN_BLOCKS_C),
            ("TwoJordanBlocksC", OrbitClass.TWO_JORDAN_BLOCKS_C),
            ("two-jordan-blocks", OrbitClass.TWO_JORDAN_BLOCKS_C),
            ("Dim8", OrbitClass.DIM8_G),
            ("Dim8G", OrbitClass.DIM8_G),
            ("OTHER", OrbitClass.OTHER),
        ],
    )
    def test_parse(self, text, expected):
        """Orbit class names are normalized with inflection."""
        assert OrbitClass.parse(text) is expected

    def test_unknown(self):
        """Unknown classes raise."""
        with pytest.raises(InvalidArgument):
            OrbitClass.parse("minimal")


class TestUniversalityTable:
    @pytest.mark.parametrize(
        "type_name, orbit_class",
        [
            ("A", "Regular"),
            ("E", "Regular"),
            ("B", "Subregular"),
            ("C", "Subregular"),
            ("F", "Subregular"),
            ("G", "Subregular"),
            ("C", "TwoJordanBlocks"),
            ("G", "Dim8"),
        ],
    )
    def test_exceptions(self, type_name, orbit_class):
        """Every exception row answers not universal."""
        assert universality_table(type_name, orbit_class) is False

    @pytest.mark.parametrize(
        "type_name, orbit_class",
        [("A", "Subregular"), ("D", "Subregular"), ("E", "Subregular"), ("B", "Other"), ("G", "Other")],
    )
    def test_universal(self, type_name, orbit_class):
        """Everything else is universal."""
        assert universality_table(type_name, orbit_class) is True

    @pytest.mark.parametrize("type_name, orbit_class", [("B", "TwoJordanBlocks"), ("F", "Dim8")])
    def test_inconsistent(self, type_name, orbit_class):
        """Classes that only exist in one type are refused elsewhere."""
        with pytest.raises(InconsistentQuery):
            universality_table(type_name, orbit_class)

    def test_rank_suffix_ignored(self):
        """B3 is read as type B."""
        assert universality_table("B3", "Regular") is False

    def test_unknown_type(self):
        """Only A .. G are types."""
        with pytest.raises(InvalidArgument):
            universality_table("H", "Regular")

    def test_report_cites_row(self):
        """The report names the row that applies."""
        report = universality_report("G", "Dim8")
        assert report.passed
        assert report.witnesses[0].output == "not universal"
        assert report.witnesses[1].output == "exception row: type G, dim8_g orbit"
        assert table_row("A", "Subregular").startswith("no exception row")
