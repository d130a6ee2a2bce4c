from fractions import Fraction

import pytest
from sympy import QQ
from wbench.errors import InvalidArgument
from wbench.exactalg import coefficients, rational_ring, transfer
from wbench.exactalg.cpoly import is_homogeneous, ring_names


class TestRationalRing:
    def test_cached(self):
        """The same names give the same ring object."""
        assert rational_ring(("a", "b")) is rational_ring(("a", "b"))

    def test_needs_variables(self):
        """A ring without variables is refused."""
        with pytest.raises(InvalidArgument):
            rational_ring(())


class TestHelpers:
    def test_coefficients_are_fractions(self):
        """Coefficients come back as Fractions."""
        ring = rational_ring(("a", "b"))
        a, b = ring.gens
        p = a**2 * b * QQ(1, 3) - 2
        assert dict(coefficients(p)) == {(2, 1): Fraction(1, 3), (0, 0): Fraction(-2)}

    def test_is_homogeneous(self):
        """Total and weighted homogeneity."""
        ring = rational_ring(("a", "b"))
        a, b = ring.gens
        assert is_homogeneous(a * b + b**2, 2)
        assert not is_homogeneous(a * b + b, 2)
        assert is_homogeneous(a**2 + b, 2, weights=(1, 2))

    def test_transfer_by_name(self):
        """Variables are matched by name across rings."""
        source = rational_ring(("b",))
        target = rational_ring(("a", "b"))
        moved = transfer(source.gens[0] ** 2 + 1, target)
        assert moved == target.gens[1] ** 2 + 1

    def test_transfer_missing_variable(self):
        """A variable the target lacks is an error."""
        with pytest.raises(InvalidArgument):
            transfer(rational_ring(("c",)).gens[0], rational_ring(("a", "b")))

    def test_ring_names(self):
        """Variable names come back in ring order."""
        assert ring_names(rational_ring(("x", "D1_1", "D2_1"))) == ("x", "D1_1", "D2_1")

    def test_transfer_into_wider_ring(self):
        """A polynomial moves into a ring with an extra leading variable."""
        source = rational_ring(("D1_1", "D2_1"))
        target = rational_ring(("x", "D1_1", "D2_1"))
        d1, d2 = source.gens
        moved = transfer(d1 * d2 - QQ(1, 2) * d2, target)
        assert moved == target.gens[1] * target.gens[2] - QQ(1, 2) * target.gens[2]
