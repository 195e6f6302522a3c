from unittest                                           import TestCase
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.points.Disc__Point             import COMPARE__DISTINCT, COMPARE__EQUAL
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2
from adic_spaces_toolkit.points.Point__Type_5           import Point__Type_5
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec


class test_Point__Type_5(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx = Padic__Context(prime=5, precision=8)

    def eta(self, c, r, side):
        return Point__Type_5(self.ctx.scalar(c), r, side)

    def test__init__(self):
        point = self.eta(0, 1, '+')
        assert point.side is Point__Side.PLUS
        with self.assertRaises(Invalid__Spec):
            self.eta(0, '+inf', '-')
        with self.assertRaises(ValueError):
            self.eta(0, 1, '*')

    def test_direction_level(self):
        assert self.eta(0, 1    , '+').direction_level() == 2
        assert self.eta(0, '1/2', '+').direction_level() == 1
        assert self.eta(0, 1    , '-').direction_level() == 1

    def test_compare(self):
        assert self.eta(0, 1, '+').compare(self.eta(25, 1, '+')) == COMPARE__EQUAL
        assert self.eta(0, 1, '+').compare(self.eta(5 , 1, '+')) == COMPARE__DISTINCT            # another residue direction
        assert self.eta(0, 1, '-').compare(self.eta(5 , 1, '-')) == COMPARE__EQUAL               # one outward direction
        assert self.eta(0, 1, '-').compare(self.eta(1 , 1, '-')) == COMPARE__DISTINCT
        assert self.eta(0, 1, '+').compare(self.eta(0 , 1, '-')) == COMPARE__DISTINCT
        assert self.eta(0, 1, '+').compare(self.eta(0 , 2, '+')) == COMPARE__DISTINCT
        assert self.eta(0, 1, '+').compare(Point__Type_2(self.ctx.zero(), 1)) == COMPARE__DISTINCT

    def test_partner(self):
        point = self.eta(5, 1, '-')
        assert point.partner()            == Point__Type_2(self.ctx.scalar(5), 1)
        assert point.max_generalization() == Point__Type_2(self.ctx.zero()   , 1)
        assert point.avatar_radius()      == 1

    def test_key_and_hash(self):
        assert self.eta(7, 1, '+').key() == (7, 1, '+')
        assert self.eta(7, 1, '-').key() == (2, 1, '-')
        assert len({self.eta(0, 1, '+'), self.eta(25, 1, '+'), self.eta(5, 1, '+')}) == 2

    def test_json_and_str(self):
        assert self.eta(5, 1, '+').json() == dict(type=5, c=[1, 1, 8], r='1', side='+')
        assert str(self.eta(5, 1, '-'))   == 'η(5, 1)-'
