from unittest                                           import TestCase
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.points.Point__Parser           import Point__Parser
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_1           import Point__Type_1
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2
from adic_spaces_toolkit.points.Point__Type_5           import Point__Type_5
from adic_spaces_toolkit.utils.Toolkit__Errors          import Parse__Error


class test_Point__Parser(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx    = Padic__Context(prime=5, precision=8)
        cls.parser = Point__Parser(cls.ctx)

    def test_parse(self):
        x = self.parser.parse('x(7)')
        assert type(x) is Point__Type_1
        assert x.c     == self.ctx.scalar(7)

        eta = self.parser.parse(' eta( 0 , 1/2 ) ')
        assert type(eta) is Point__Type_2
        assert str(eta)  == 'η(0, 1/2)'

        plus = self.parser.parse('η(5, 1)+')
        assert type(plus) is Point__Type_5
        assert plus.side  is Point__Side.PLUS
        assert self.parser.parse('eta(0,1)-').side is Point__Side.MINUS

    def test_parse__errors(self):
        for text in ('y(1)', 'eta(0)', 'eta(0,+inf)', 'eta(0,abc)', 'x(abc)', 'eta(0,1)*', '', None):
            with self.assertRaises(Parse__Error):
                self.parser.parse(text)

    def test_parse_many(self):
        points = self.parser.parse_many('x(1); eta(0,1) ;')
        assert [str(point) for point in points] == ['x(1)', 'η(0, 1)']

    def test_from_json(self):
        for text in ('x(7)', 'eta(5,1/2)', 'eta(5,1)+', 'eta(0,2)-'):
            point = self.parser.parse(text)
            assert self.parser.from_json(point.json()) == point
        with self.assertRaises(Parse__Error):
            self.parser.from_json(dict(type=3, c=[0, 1, 8]))
