from pathlib import Path

import pytest
from wbench.errors import InvalidArgument
from wbench.exactalg import Family, Generator, NCPolynomial
from wbench.exprio import Status
from wbench.utils import get_default_rule_file
from wbench.yangian import (
    Mode,
    YangianAlgebra,
    build_algebra,
    confluence_check,
    default_probes,
    dimension_report,
    graded_dimension,
    verify_centrality,
    verify_commutes,
    verify_polynomial_center,
)

SO5_COUNTS = [1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67]
GL2_COUNTS = [1, 3, 7, 15, 28, 48, 79, 123, 184]


class TestCentrality:
    def test_default_probes(self, full2: YangianAlgebra):
        """The probes are D1^1, D1^2, D2^1, D2^2, E^3, E^4, F^1, F^2 for n = 2."""
        assert [str(g) for g in default_probes(full2)] == [
            "D1^1",
            "D1^2",
            "D2^1",
            "D2^2",
            "E^3",
            "E^4",
            "F^1",
            "F^2",
        ]

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_central_coefficients_commute(self, full2: YangianAlgebra, r):
        """[Z^(r), g] reduces to zero for every probe."""
        report = verify_centrality(full2, r, default_probes(full2))
        assert report.passed, report.to_text()
        assert report.operation == "centrality"
        assert len(report.witnesses) == 8
        assert all(w.output == "0" for w in report.witnesses)

    def test_corrupted_element_fails(self, full2: YangianAlgebra):
        """Flipping the sign of D1^1 in Z^1 breaks centrality at E^3."""
        d1 = NCPolynomial.generator(Generator(Family.D1, 1), full2.alphabet)
        d2 = NCPolynomial.generator(Generator(Family.D2, 1), full2.alphabet)
        report = verify_commutes(full2, d2 - d1 - 3, [Generator(Family.E, 3)], label="bad")
        assert report.status is Status.FAIL
        assert report.failures[0].input == "[bad, E^3]"
        assert report.failures[0].output == "-2 * E^3"

    def test_corrupted_rule_file(self, tmp_path: Path):
        """A sign error in the rule file shows up as a nonzero commutator."""
        text = get_default_rule_file().read_text(encoding="utf-8")
        corrupted = text.replace("[D2^r, E^s] -> - sum", "[D2^r, E^s] -> sum")
        assert corrupted != text
        path = tmp_path / "corrupted.rules"
        path.write_text(corrupted, encoding="utf-8")
        alg = build_algebra(2, Mode.FULL, rules=path)
        report = verify_centrality(alg, 1, [Generator(Family.E, 3)])
        assert not report.passed
        assert report.failures[0].input == "[Z^1, E^3]"

    def test_degree_bound(self, full2: YangianAlgebra):
        """Commutators above the degree bound are refused up front."""
        with pytest.raises(InvalidArgument, match="above the bound"):
            verify_centrality(full2, 4, [Generator(Family.E, 4)], degree_bound=6)


class TestConfluence:
    def test_random_triples(self, full2: YangianAlgebra):
        """200 seeded triples up to degree 8 reduce associatively."""
        report = confluence_check(full2, degree_bound=8, samples=200, seed=42)
        assert report.passed, report.to_text()
        assert report.witnesses[-1].output == "0 failures"
        assert report.params["seed"] == 42

    def test_reproducible(self, full2: YangianAlgebra):
        """The same seed gives byte-identical reports."""
        first = confluence_check(full2, degree_bound=6, samples=20, seed=7)
        second = confluence_check(full2, degree_bound=6, samples=20, seed=7)
        assert first.to_json() == second.to_json()

    def test_reproducible_on_fresh_algebra(self, full2: YangianAlgebra):
        """A warm cache and a cold one give the same report."""
        warm = confluence_check(full2, degree_bound=6, samples=20, seed=7)
        cold = confluence_check(build_algebra(2, Mode.FULL), degree_bound=6, samples=20, seed=7)
        assert warm.to_json() == cold.to_json()

    def test_truncated_mode(self, so2: YangianAlgebra):
        """The quotient reduction is confluent as well."""
        assert confluence_check(so2, degree_bound=6, samples=30, seed=1).passed

    def test_arguments_checked(self, full2: YangianAlgebra):
        """Negative sample counts are refused."""
        with pytest.raises(InvalidArgument):
            confluence_check(full2, samples=-1)


class TestDimensions:
    def test_so_counts(self, so2: YangianAlgebra):
        """Graded dimensions are those of generators in degrees 1, 1, 2, 3."""
        assert graded_dimension(so2, 10) == SO5_COUNTS

    def test_dimension_report(self, so2: YangianAlgebra):
        """The counts agree with the product formula and generators stay free."""
        report = dimension_report(so2, 10)
        assert report.passed, report.to_text()
        assert report.witnesses[0].output == str(SO5_COUNTS)

    def test_gl_counts(self, gl2: YangianAlgebra):
        """Graded dimensions are those of generators in degrees 1, 1, 1, 2, 3, 3."""
        assert sorted(g.degree for g in gl2.surviving_generators()) == [1, 1, 1, 2, 3, 3]
        assert graded_dimension(gl2, 8) == GL2_COUNTS
        assert dimension_report(gl2, 8).passed

    def test_full_mode_warns(self, full2: YangianAlgebra, caplog):
        """FULL mode counts are logged as untruncated."""
        with caplog.at_level("WARNING", logger="wbench.yangian.verify"):
            graded_dimension(full2, 3)
        assert "FULL mode" in caplog.text

    def test_negative_degree(self, so2: YangianAlgebra):
        """Degrees are non-negative."""
        with pytest.raises(InvalidArgument):
            graded_dimension(so2, -1)


class TestPolynomialCenter:
    def test_so(self, so2: YangianAlgebra):
        """Z^1 and Z^3 vanish, as do Z^r for r > 4."""
        report = verify_polynomial_center(so2, range(1, 7))
        assert report.passed, report.to_text()
        outputs = {w.input: w.output for w in report.witnesses}
        assert outputs["Z^1"] == "0"
        assert outputs["Z^3"] == "0"
        assert outputs["Z^5"] == "0"
        assert outputs["Z^6"] == "0"

    def test_gl(self, gl2: YangianAlgebra):
        """Z^1 has degree at most one and Z^5 vanishes."""
        assert verify_polynomial_center(gl2, [1, 5]).passed

    def test_full_mode_refused(self, full2: YangianAlgebra):
        """The check only makes sense in a quotient."""
        with pytest.raises(InvalidArgument):
            verify_polynomial_center(full2, [1])
