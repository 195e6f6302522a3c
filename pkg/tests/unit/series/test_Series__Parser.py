from fractions                                          import Fraction
from unittest                                           import TestCase
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Series__Parser          import Series__Parser
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Parse__Error


class test_Series__Parser(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx    = Padic__Context(prime=5, precision=8)
        cls.parser = Series__Parser(cls.ctx, Chart(0, 1), 4)

    def test_parse_coeffs__expression(self):
        assert self.parser.parse_coeffs('T^2 - 5')         == {2: 1, 0: -5}
        assert self.parser.parse_coeffs('3 + T + 5*T^-1')  == {0: 3, 1: 1, -1: 5}
        assert self.parser.parse_coeffs('(1 + T)*(1 - T)') == {0: 1, 2: -1}
        assert self.parser.parse_coeffs('1/5*T')           == {1: Fraction(1, 5)}
        assert self.parser.parse_coeffs('T - T')           == {}

    def test_parse_coeffs__sparse(self):
        assert self.parser.parse_coeffs('0:3 1:1 -1:5')  == {0: 3, 1: 1, -1: 5}
        assert self.parser.parse_coeffs('2:1/25,-1:-3')  == {2: Fraction(1, 25), -1: -3}
        assert self.parser.parse_coeffs('0:1; 0:2')      == {0: 3}

    def test_parse(self):
        f = self.parser.parse('3 + T + 5*T^-1')
        assert f.chart       == Chart(0, 1)
        assert f.window      == 4
        assert f.exponents() == [-1, 0, 1]
        assert f.coefficient(-1) == self.ctx.scalar(5)

    def test_parse__errors(self):
        for text in ('', '   ', 'T^(1/2)', 'sin(T)', '0:x', '3 +* T', 'x + T'):
            with self.assertRaises(Parse__Error):
                self.parser.parse(text)
        with self.assertRaises(Chart__Mismatch):
            Series__Parser(self.ctx, Chart.disc(), 4).parse('T^-1')
