from unittest.mock                                      import patch
from unittest                                           import TestCase
from adic_spaces_toolkit.cartan.Cartan__Factorizer      import Cartan__Factorizer
from adic_spaces_toolkit.cartan.Laurent__Matrix         import Laurent__Matrix
from adic_spaces_toolkit.cartan.Matrix__Parser          import Matrix__Parser
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Non_Convergence, Not_Near_Identity, Precision__Exhausted, Support__Violation

MATRIX__OFF_DIAGONAL = "n=2\n0 0 0:1\n0 1 -1:5\n1 0 1:5\n1 1 0:1"                          # I + 5T⁻¹·E12 + 5T·E21


class test_Cartan__Factorizer(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx        = Padic__Context(prime=5, precision=8)
        cls.ctx_12     = Padic__Context(prime=5, precision=12)
        cls.factorizer = Cartan__Factorizer(ctx=cls.ctx)
        cls.circle     = Chart.circle(0)

    def off_diagonal(self):
        return Matrix__Parser(self.ctx_12, 4).parse(MATRIX__OFF_DIAGONAL)

    def test_resolve_target(self):
        with self.factorizer as _:
            assert _.resolve_target()  == 6
            assert _.resolve_target(3) == 3
            with self.assertRaises(Precision__Exhausted):
                _.resolve_target(9)
        assert Cartan__Factorizer(ctx=self.ctx, target=4).resolve_target() == 4

    def test_resolve_max_iter(self):
        assert self.factorizer.resolve_max_iter(6, 1)     == 10
        assert self.factorizer.resolve_max_iter(6, 2)     == 7
        assert self.factorizer.resolve_max_iter(6, 2, 3)  == 3

    def test_factor__identity(self):
        B      = Laurent__Matrix.identity(self.ctx, self.circle, 4, 2)
        result = self.factorizer.factor(B)
        assert result.iterations   == 0
        assert result.residual_val is INFINITY
        assert result.decay_trace  == ()
        assert result.B1.chart     == Chart.disc(0)
        assert result.B2.chart     == Chart.disc_at_infinity(0)
        assert result.B1.minus_identity().is_zero()
        assert result.B2.minus_identity().is_zero()

    def test_factor__positive_support(self):
        B      = Laurent__Matrix(self.ctx, self.circle, 4, [[Laurent__Series(self.ctx, self.circle, 4, {0: 1, 1: 5})]])
        result = self.factorizer.factor(B)
        assert result.B1.entry(0, 0) == Laurent__Series(self.ctx, Chart.disc(0), 8, {0: 1, 1: 5})
        assert result.B2.minus_identity().is_zero()
        assert result.decay_trace    == (2, 4, INFINITY)
        assert result.residual_val   >= 6
        assert result.effective_window == 8
        assert result.truncated      is False

    def test_factor__off_diagonal(self):
        B      = self.off_diagonal()
        result = Cartan__Factorizer(ctx=self.ctx_12).factor(B, target=10)
        assert result.iterations   == 4
        assert result.initial_val  == 1
        assert result.decay_trace  == (2, 4, 8, INFINITY)
        assert result.residual_val >= 10
        assert result.truncated    is False
        for row in result.B1.entries:
            for entry in row:
                assert all(exponent >= 0 for exponent in entry.exponents())
        for row in result.B2.entries:
            for entry in row:
                assert all(exponent <= 0 for exponent in entry.exponents())
        assert result.json()['decay_trace'] == ['2', '4', '8', '+inf']

    def test_factor__geometric_decay(self):
        result = Cartan__Factorizer(ctx=self.ctx_12).factor(self.off_diagonal(), target=10)
        values = (result.initial_val,) + result.decay_trace
        for previous, current in zip(values, values[1:]):
            assert current >= previous + result.initial_val

    def test_factor__determinant_consistency(self):
        B        = self.off_diagonal()
        result   = Cartan__Factorizer(ctx=self.ctx_12).factor(B, target=10)
        det_B1   = result.B1.determinant(val_cap=12).sup_val()
        det_B2   = result.B2.determinant(val_cap=12).sup_val()
        assert det_B1 + det_B2 == B.determinant().sup_val()

    def test_factor__errors(self):
        with self.assertRaises(Not_Near_Identity):
            self.factorizer.factor(Laurent__Matrix(self.ctx, self.circle, 4, [[Laurent__Series(self.ctx, self.circle, 4, {0: 1, 1: 1})]]))
        with self.assertRaises(Not_Near_Identity):
            self.factorizer.factor(Laurent__Matrix(self.ctx, self.circle, 4, [[Laurent__Series(self.ctx, self.circle, 4, {0: 2})]]))
        with self.assertRaises(Chart__Mismatch):
            self.factorizer.factor(Laurent__Matrix.identity(self.ctx, Chart(0, 1), 4, 1))
        with self.assertRaises(Non_Convergence) as context:
            Cartan__Factorizer(ctx=self.ctx_12).factor(self.off_diagonal(), target=10, max_iter=1)
        assert context.exception.decay_trace == [2]

    def test_trivialize(self):
        identity = Laurent__Matrix.identity(self.ctx, self.circle, 4, 2)
        Y, Z, _  = self.factorizer.trivialize(identity)
        assert Y.minus_identity().is_zero()
        assert Z.minus_identity().is_zero()

        B         = self.off_diagonal()
        Y, Z, result = Cartan__Factorizer(ctx=self.ctx_12).trivialize(B, target=10)
        assert Y.chart == Chart.disc(0)
        assert Z.chart == Chart.disc_at_infinity(0)
        window    = Y.window
        B_wide    = B.with_window(window)
        residual  = Y.restrict(self.circle).sub(B_wide.mul(Z.restrict(self.circle), val_cap=12)).prune(12).sup_val()
        assert residual >= 10
        assert result.residual_val >= 10

    def test_check_split(self):
        V    = self.off_diagonal().minus_identity()
        C, D = V.split()
        assert C.exponents() == [1]
        assert D.exponents() == [-1]
        self.factorizer.check_split(C, D)
        with self.assertRaises(Support__Violation):
            self.factorizer.check_split(D, C)
        with self.assertRaises(Support__Violation):
            self.factorizer.check_split(C, C)

    def test_factor__rejects_a_swapped_split(self):
        split = Laurent__Matrix.split
        with patch.object(Laurent__Matrix, 'split', lambda matrix: tuple(reversed(split(matrix)))):
            with self.assertRaises(Support__Violation):
                Cartan__Factorizer(ctx=self.ctx_12).factor(self.off_diagonal(), target=10)
