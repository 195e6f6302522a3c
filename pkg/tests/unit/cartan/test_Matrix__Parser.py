from unittest                                           import TestCase
from adic_spaces_toolkit.cartan.Matrix__Parser          import Matrix__Parser
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.utils.Toolkit__Errors          import Parse__Error

MATRIX__NEAR_IDENTITY = """
# I + 5T⁻¹·E12 + 5T·E21
n=2
0 0 0:1
0 1 -1:5
1 0 1:5
1 1 0:1
"""


class test_Matrix__Parser(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx    = Padic__Context(prime=5, precision=8)
        cls.parser = Matrix__Parser(cls.ctx, 4)

    def test_parse(self):
        matrix = self.parser.parse(MATRIX__NEAR_IDENTITY)
        assert matrix.n      == 2
        assert matrix.chart  == Chart.circle(0)
        assert matrix.window == 4
        assert matrix.entry(0, 1) == Laurent__Series(self.ctx, Chart.circle(0), 4, {-1: 5})
        assert matrix.minus_identity().sup_val() == 1

    def test_parse__chart_and_expressions(self):
        matrix = self.parser.parse("n=1\nchart=[1,1]\n0 0 1 + 5*T   # diagonal\n0 0 T^-1")
        assert matrix.chart       == Chart.circle(1)
        assert matrix.entry(0, 0) == Laurent__Series(self.ctx, Chart.circle(1), 4, {0: 1, 1: 5, -1: 1})

    def test_parse__errors(self):
        for text in ('0 0 1'                 ,
                     'n=0'                   ,
                     'n=two\n0 0 1'          ,
                     'n=1\n0 0'              ,
                     'n=1\n1 0 1'            ,
                     'n=1\nx 0 1'            ,
                     'n=1\n0 0 0:x'          ,
                     'n=1\nchart=0,0\n0 0 1' ):
            with self.assertRaises(Parse__Error):
                self.parser.parse(text)
