from unittest                                           import TestCase
from adic_spaces_toolkit.cech.Cech__Cohomology          import Cech__Cohomology, TRUNCATION_FLAG__TRUNCATED_DIMENSION
from adic_spaces_toolkit.cech.Cech__Space__Spec         import Cech__Space__Spec
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Rational__Val            import val_to_json
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec


class test_Cech__Cohomology(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx = Padic__Context(prime=5, precision=8)

    def cohomology(self, window, **kwargs):
        return Cech__Cohomology(ctx=self.ctx, window=window, **kwargs)

    def test_resolve_threshold(self):
        assert self.cohomology(4).resolve_threshold()              == 6
        assert self.cohomology(4, threshold=3).resolve_threshold() == 3
        assert Cech__Cohomology(ctx=Padic__Context(prime=5, precision=2)).resolve_threshold() == 1
        with self.assertRaises(Invalid__Spec):
            self.cohomology(4, threshold=9).resolve_threshold()

    def test_cohomology__proj_line(self):
        for window in (1, 2, 5, 10):
            report = self.cohomology(window).cohomology_of_spec(Cech__Space__Spec.proj_line())
            assert report.dims == [1, 0]
            assert report.grade(0) == dict(g=0, divisors=['0'], h0=1, h1=0)
            assert report.truncation_flags == []

    def test_cohomology__tate_curve(self):
        for vq in (1, 2, 3):
            for window in (5, 10):
                report = self.cohomology(window).cohomology_of_spec(Cech__Space__Spec.tate_curve(vq=vq))
                assert report.dims     == [1, 1]
                assert report.grade(0) == dict(g=0, divisors=['0'], h0=1, h1=1)
                q = self.ctx.p_to(vq)
                for grade in range(-window, window + 1):
                    if grade == 0:
                        continue
                    entry    = report.grade(grade)
                    expected = sorted([min(0, grade * vq), 0])
                    assert entry['divisors'] == [val_to_json(value) for value in expected]
                    assert sum(expected)     == q.pow(grade).sub(1).val()               # v(q^i - 1)
                    assert (entry['h0'], entry['h1']) == (0, 0)

    def test_cohomology__bidisc_boundary(self):
        for window in (1, 2, 3):
            report = self.cohomology(window).cohomology_of_spec(Cech__Space__Spec.bidisc_boundary())
            assert report.dims == [(window + 1) ** 2, window ** 2]
            assert report.truncation_flags == [TRUNCATION_FLAG__TRUNCATED_DIMENSION]
            assert report.grade((-1, -1)) == dict(g=[-1, -1], divisors=[], h0=0, h1=1)
        assert self.cohomology(3).cohomology_of_spec(Cech__Space__Spec.bidisc_boundary()).dims == [16, 9]

    def test_cohomology__annulus(self):
        report = self.cohomology(8).cohomology_of_spec(Cech__Space__Spec.annulus(0, '1/2', 1))
        assert report.dims == [17, 0]
        assert self.cohomology(4).cohomology_of_spec(Cech__Space__Spec.annulus(0, 1, 3)).h1() == 0

    def test__dims_independent_of_window(self):
        for spec in (Cech__Space__Spec.proj_line(), Cech__Space__Spec.tate_curve(vq=2)):
            assert self.cohomology(3).cohomology_of_spec(spec).dims == self.cohomology(6).cohomology_of_spec(spec).dims

    def test__parallel_matches_serial(self):
        spec     = Cech__Space__Spec.tate_curve(vq=3)
        serial   = self.cohomology(6                ).cohomology_of_spec(spec)
        parallel = self.cohomology(6, max_workers=4 ).cohomology_of_spec(spec)
        assert parallel.json() == serial.json()

    def test_cohomology_of_matrix(self):
        with self.cohomology(2) as _:
            assert _.cohomology_of_matrix([[1, -1], [1, -1]]) == dict(dims=[1, 1], divisors=['0'], rank=1, threshold=6)
            assert _.cohomology_of_matrix([[5, 0], [0, 25]])['dims'] == [0, 0]
            with self.assertRaises(Invalid__Spec):
                _.cohomology_of_matrix([[1, 2], [3]])

    def test_acyclicity_sweep(self):
        specs   = Cech__Cohomology.random_annulus_specs(25, seed=4)
        reports = self.cohomology(3).acyclicity_sweep(specs)
        assert len(reports) == 25
        for spec, report in zip(specs, reports):
            assert spec.a < spec.s0 < spec.b
            assert report.dims == [7, 0]
        table = Cech__Cohomology.sweep_table(reports)
        assert table[0] == dict(spec=specs[0].json(), dims=[7, 0])
        assert Cech__Cohomology.random_annulus_specs(5, seed=9) == Cech__Cohomology.random_annulus_specs(5, seed=9)
