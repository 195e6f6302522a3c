from fractions                                          import Fraction
from unittest                                           import TestCase
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY
from adic_spaces_toolkit.points.Rank2__Val              import Rank2__Val


class test_Rank2__Val(TestCase):

    def test__init__(self):
        assert Rank2__Val('1/2').main         == Fraction(1, 2)
        assert Rank2__Val(1).eps_coeff        == 0
        assert Rank2__Val(INFINITY, 3).eps_coeff == 0
        assert Rank2__Val.infinity().main     is INFINITY

    def test_ordering(self):
        assert Rank2__Val(1, 0 ) <  Rank2__Val(1, 1)
        assert Rank2__Val(1, -1) <  Rank2__Val(1, 0)
        assert Rank2__Val(0, 5 ) <  Rank2__Val(1, -5)
        assert Rank2__Val(7, 2 ) <  Rank2__Val.infinity()
        assert Rank2__Val(2, 1 ) >= Rank2__Val(2, 1)
        assert min(Rank2__Val(1, 1), Rank2__Val(1, -2), Rank2__Val(3)) == Rank2__Val(1, -2)

    def test_add(self):
        assert Rank2__Val(1, 1) + Rank2__Val('1/2', -3) == Rank2__Val('3/2', -2)
        assert (Rank2__Val(1, 1) + Rank2__Val.infinity()).main is INFINITY

    def test_is_rank_one(self):
        assert Rank2__Val(1).is_rank_one()    is True
        assert Rank2__Val(1, 1).is_rank_one() is False

    def test_json_and_str(self):
        assert Rank2__Val(1, 0).json()          == [1, 0]
        assert Rank2__Val('1/2', -1).json()     == ['1/2', -1]
        assert Rank2__Val.infinity().json()     == ['+inf', 0]
        assert str(Rank2__Val(1, 2))            == '1 + 2ε'
        assert str(Rank2__Val(1, -1))           == '1 - 1ε'
        assert str(Rank2__Val('1/2'))           == '1/2'
        assert {Rank2__Val(1, 1), Rank2__Val(1, 1)} == {Rank2__Val(1, 1)}
