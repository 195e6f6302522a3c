from fractions                                          import Fraction
from unittest                                           import TestCase
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, NEG_INFINITY
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec, Parse__Error


class test_Chart(TestCase):

    def test__init__(self):
        chart = Chart('1/2', 1)
        assert chart.a == Fraction(1, 2)
        assert chart.b == 1
        with self.assertRaises(Invalid__Spec):
            Chart(2, 1)
        with self.assertRaises(Invalid__Spec):
            Chart(NEG_INFINITY, INFINITY)
        with self.assertRaises(Invalid__Spec):
            Chart(INFINITY, INFINITY)

    def test_shapes(self):
        assert Chart.disc()            .is_disc()             is True
        assert Chart.disc_at_infinity().is_disc_at_infinity() is True
        assert Chart.circle(1)         .is_circle()           is True
        assert Chart.annulus(0, 1)     .is_annulus()          is True
        assert Chart.circle(1)         .is_annulus()          is False
        assert Chart.disc()            .is_annulus()          is False

    def test_allows_exponent(self):
        assert Chart.disc()            .allows_exponent(-1) is False
        assert Chart.disc()            .allows_exponent( 2) is True
        assert Chart.disc_at_infinity().allows_exponent( 1) is False
        assert Chart.annulus(0, 1)     .allows_exponent(-3) is True

    def test_contains(self):
        assert Chart(0, 2).contains_val(1)                  is True
        assert Chart(0, 2).contains_val(3)                  is False
        assert Chart.disc().contains_val(INFINITY)          is True
        assert Chart(0, 2).contains_chart(Chart.circle(1))  is True
        assert Chart.disc().contains_chart(Chart(0, 2))     is True
        assert Chart(0, 2).contains_chart(Chart.disc())     is False

    def test_shift(self):
        assert Chart(0, 1).shift(-1)      == Chart(-1, 0)
        assert Chart.disc(0).shift(2)     == Chart.disc(2)

    def test_exponent_offset(self):
        assert Chart(0, 1).exponent_offset( 2)  == 0
        assert Chart(0, 1).exponent_offset(-1)  == -1
        assert Chart.disc(1).exponent_offset(3) == 3
        assert Chart.disc().exponent_offset(-1) is NEG_INFINITY

    def test_is_integral(self):
        assert Chart(0, 1).is_integral()            is True
        assert Chart.disc().is_integral()           is True
        assert Chart('1/2', 1).is_integral()        is False

    def test_parse(self):
        assert Chart.parse('[0,1]')      == Chart(0, 1)
        assert Chart.parse('[0,+inf]')   == Chart.disc()
        assert Chart.parse(' [-inf,0] ') == Chart.disc_at_infinity()
        with self.assertRaises(Parse__Error):
            Chart.parse('0,1')

    def test_json_and_str(self):
        assert Chart.disc().json()     == ['0', '+inf']
        assert str(Chart('1/2', 1))    == '[1/2,1]'
