from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from binopy.dyadic import Dyadic, HALF, ONE, ZERO, asDyadic

dyadics = st.builds(Dyadic, st.integers(-2 ** 40, 2 ** 40), st.integers(0, 40))


class TestDyadic:

    def test_canonical_form(self):
        assert Dyadic(4, 3) == Dyadic(1, 1)
        assert Dyadic(4, 3).exponent == 1
        assert Dyadic(0, 7).exponent == 0
        assert Dyadic(3, -2) == 12
        assert Dyadic(6, 1) == 3

    def test_from_word(self):
        assert Dyadic.fromWord('011') == Dyadic(3, 3)
        assert Dyadic.fromWord('') == ZERO
        assert Dyadic.fromWord('1') == HALF

    def test_text(self):
        assert str(Dyadic(3, 3)) == '3/8'
        assert repr(Dyadic(3, 3)) == '< Dyadic 3/8 >'
        assert str(ONE) == '1'

    def test_as_dyadic(self):
        assert asDyadic(Fraction(5, 16)) == Dyadic(5, 4)
        assert asDyadic(2) == Dyadic(2)
        with pytest.raises(ValueError):
            asDyadic(Fraction(1, 3))
        with pytest.raises(TypeError):
            asDyadic(0.5)

    def test_shift(self):
        assert Dyadic(3, 2).shift(1) == Dyadic(3, 1)
        assert Dyadic(3, 2).shift(-1) == Dyadic(3, 3)
        assert Dyadic(3, 2).shift(-3) == Dyadic(3, 5)

    def test_dict(self):
        assert Dyadic(3, 3).toDict() == {'num': 3, 'exp': 3}
        assert Dyadic.fromDict({'num': 6, 'exp': 4}) == Dyadic(3, 3)

    @given(a=dyadics, b=dyadics)
    def test_arithmetic_is_exact(self, a, b):
        fa, fb = a.toFraction(), b.toFraction()
        assert (a + b).toFraction() == fa + fb
        assert (a - b).toFraction() == fa - fb
        assert (a * b).toFraction() == fa * fb
        assert (a < b) == (fa < fb)
        assert (a == b) == (fa == fb)

    @given(a=dyadics)
    def test_hash_matches_fraction(self, a):
        assert hash(a) == hash(a.toFraction())
        assert float(a) == float(a.toFraction())
