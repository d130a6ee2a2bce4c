import pytest
from wbench.errors import AlphabetMismatch, InadmissibleGenerator, InvalidArgument
from wbench.exactalg import Alphabet, Family, Generator
from wbench.exactalg.generators import merge_alphabets


class TestGenerator:
    def test_pbw_order(self):
        """F < D1 < D2 < E, then by superscript."""
        ordered = [
            Generator(Family.F, 1),
            Generator(Family.F, 2),
            Generator(Family.D1, 1),
            Generator(Family.D2, 1),
            Generator(Family.D2, 5),
            Generator(Family.E, 3),
        ]
        assert sorted(reversed(ordered)) == ordered

    def test_degrees(self):
        """Canonical degree is the superscript, Kazhdan degree doubles it."""
        g = Generator(Family.D2, 3)
        assert g.degree == 3
        assert g.kazhdan_degree == 6
        assert str(g) == "D2^3"

    @pytest.mark.parametrize("superscript", [0, -2, True, "1"])
    def test_invalid_superscript(self, superscript):
        """Superscripts are positive integers."""
        with pytest.raises(InadmissibleGenerator):
            Generator(Family.D1, superscript)

    def test_family_parse(self):
        """Family names parse; others raise."""
        assert Family.parse("D1") is Family.D1
        with pytest.raises(InvalidArgument):
            Family.parse("G")


class TestAlphabet:
    def test_e_threshold(self):
        """E^(r) needs r > 2n - 2."""
        alphabet = Alphabet.for_rank(2)
        assert alphabet.shift == 2
        assert alphabet.n == 2
        assert alphabet.admits(Generator(Family.E, 3))
        assert not alphabet.admits(Generator(Family.E, 2))
        assert alphabet.admits(Generator(Family.F, 1))

    def test_check_message(self):
        """The error names the shift and the generator."""
        with pytest.raises(InadmissibleGenerator, match="2n-2 = 4, got E\\^4"):
            Alphabet.for_rank(3).check(Generator(Family.E, 4))

    def test_merge(self):
        """None is compatible with everything; different shifts are not."""
        a2, a3 = Alphabet.for_rank(2), Alphabet.for_rank(3)
        assert merge_alphabets(None, a2) == a2
        assert merge_alphabets(a2, None) == a2
        assert merge_alphabets(a2, Alphabet.for_rank(2)) == a2
        with pytest.raises(AlphabetMismatch):
            merge_alphabets(a2, a3)
