from unittest                                           import TestCase
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY
from adic_spaces_toolkit.points.Disc__Point             import COMPARE__DISTINCT, COMPARE__EQUAL
from adic_spaces_toolkit.points.Point__Type_1           import Point__Type_1
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2


class test_Point__Type_1(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx = Padic__Context(prime=5, precision=8)

    def point(self, c):
        return Point__Type_1(self.ctx.scalar(c))

    def test_compare(self):
        assert self.point(7).compare(self.point(7))                     == COMPARE__EQUAL
        assert self.point(7).compare(self.point(2))                     == COMPARE__DISTINCT
        assert self.point(7).compare(self.point(7 + 5 ** 9))            == COMPARE__EQUAL              # equal at working precision
        assert self.point(0).compare(Point__Type_2(self.ctx.zero(), 1)) == COMPARE__DISTINCT
        assert self.point(7) == self.point(7)
        assert self.point(7) != self.point(2)

    def test_radius_and_position(self):
        point = self.point(5)
        assert point.avatar_radius()           is INFINITY
        assert point.chart_position()          == 1
        assert self.point(0).chart_position()  is INFINITY
        assert point.max_generalization()      is point

    def test_json_and_str(self):
        assert self.point(7).json() == dict(type=1, c=[0, 7, 8])
        assert str(self.point(-7))  == 'x(-7)'

    def test__hash__(self):
        assert hash(self.point(7))      == hash(self.point(7 + 5 ** 9))
        assert hash(self.point('1/25')) == hash(self.point('1/25'))
        assert len({self.point(1), self.point(2), self.point(1)}) == 2
        assert {self.point(3): 'three'}[self.point(3 + 5 ** 10)]  == 'three'
