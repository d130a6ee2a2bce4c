import pytest
from wbench.errors import InvalidArgument, ReexpressionError
from wbench.kleinian import (
    KleinianRing,
    bracket_table,
    build_kleinian,
    degree_check,
    expected_brackets,
    from_invariants,
    generation_check,
    induced_bracket,
    invariant_monomials,
    is_invariant,
    jacobi_check,
    kleinian_report,
    poisson_ideal_check,
    to_invariants,
)

M_VALUES = range(2, 9)


class TestKleinianRing:
    @pytest.mark.parametrize("m", M_VALUES)
    def test_relation(self, m):
        """uv = w^m in Q[x, y]."""
        ring = build_kleinian(m)
        assert ring.u * ring.v == ring.w**m
        assert ring.weights() == (m, m, 2)

    @pytest.mark.parametrize("m", [1, 0, 2.0])
    def test_invalid(self, m):
        """m is an integer at least 2."""
        with pytest.raises(InvalidArgument):
            KleinianRing(m)

    def test_invariance(self):
        """x^a y^b is invariant iff a = b mod m."""
        ring = build_kleinian(3)
        assert is_invariant(ring, ring.x**4 * ring.y)
        assert not is_invariant(ring, ring.x**2)

    def test_reexpression(self):
        """x^5 y^2 = u w^2 for m = 3, and back."""
        ring = build_kleinian(3)
        u, v, w = ring.invariants.gens
        p = ring.x**5 * ring.y**2
        assert to_invariants(ring, p) == u * w**2
        assert from_invariants(ring, u * w**2) == p

    def test_reexpression_refuses_non_invariants(self):
        """x alone is not invariant."""
        ring = build_kleinian(2)
        with pytest.raises(ReexpressionError):
            to_invariants(ring, ring.x)

    def test_invariant_monomials(self):
        """For m = 2 up to degree 2: 1, x^2, xy, y^2."""
        ring = build_kleinian(2)
        assert invariant_monomials(ring, 2) == [
            ring.plane.one,
            ring.x**2,
            ring.x * ring.y,
            ring.y**2,
        ]


class TestBrackets:
    def test_canonical_bracket(self):
        """{x, y} = 1."""
        ring = build_kleinian(2)
        assert induced_bracket(ring, ring.x, ring.y) == 1

    @pytest.mark.parametrize("m", M_VALUES)
    def test_table(self, m):
        """{w,u} = -mu, {w,v} = mv, {u,v} = m^2 w^(m-1)."""
        ring = build_kleinian(m)
        table = bracket_table(ring)
        assert table.entries == expected_brackets(ring)
        assert table.bracket("u", "w") == -table.bracket("w", "u")
        assert table.bracket("v", "v") == 0

    @pytest.mark.parametrize("m", M_VALUES)
    def test_jacobi(self, m):
        """The Jacobi identity holds on invariant monomials up to degree 8."""
        report = jacobi_check(build_kleinian(m), 8)
        assert report.passed
        assert report.witnesses[-1].output == "0 failures"

    @pytest.mark.parametrize("m", M_VALUES)
    def test_poisson_ideal(self, m):
        """The relation generates a Poisson ideal."""
        assert poisson_ideal_check(build_kleinian(m)).passed

    @pytest.mark.parametrize("m", M_VALUES)
    def test_degree(self, m):
        """Brackets of generators have degree deg a + deg b - 2."""
        assert degree_check(build_kleinian(m)).passed

    def test_generation(self):
        """Every invariant monomial is a polynomial in u, v, w."""
        assert generation_check(build_kleinian(4), 8).passed

    def test_report(self):
        """The combined report passes and prints the table."""
        report = kleinian_report(build_kleinian(3))
        assert report.passed, report.to_text()
        outputs = {w.input: w.output for w in report.witnesses}
        assert outputs["{w, u}"] == "-3 * u"
        assert outputs["{w, v}"] == "3 * v"
        assert outputs["{u, v}"] == "9 * w^2"
