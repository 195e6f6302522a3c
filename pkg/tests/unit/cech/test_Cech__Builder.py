from unittest                                           import TestCase
from adic_spaces_toolkit.cech.Cech__Builder             import Cech__Builder
from adic_spaces_toolkit.cech.Cech__Space__Spec         import Cech__Space__Spec
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec


class test_Cech__Builder(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ctx = Padic__Context(prime=5, precision=8)

    def builder(self, window):
        return Cech__Builder(ctx=self.ctx, window=window)

    def test_build__proj_line(self):
        with self.builder(2) as _:
            complex_ = _.build(Cech__Space__Spec.proj_line())
        grade_0 = complex_.block(0)
        assert grade_0.cols   == (('U1', 0), ('U2', 0))
        assert grade_0.matrix == ((self.ctx.one(), self.ctx.from_int(-1)),)
        assert complex_.block( 1).cols == (('U1',  1),)
        assert complex_.block(-2).cols == (('U2', -2),)
        assert complex_.block( 2).matrix == ((self.ctx.one(),),)
        assert complex_.term_dims() == (6, 5)

    def test_build__annulus(self):
        complex_ = self.builder(3).build(Cech__Space__Spec.annulus(0, 1, 2))
        assert all(len(block.cols) == 2 for block in complex_.blocks)
        assert complex_.term_dims() == (14, 7)

    def test_build__tate_curve(self):
        complex_ = self.builder(1).build(Cech__Space__Spec.tate_curve(vq=1))
        q        = self.ctx.scalar(5)
        block    = complex_.block(1)
        assert block.rows   == (('W12', 1), ('W12q', 1))
        assert block.matrix == ((self.ctx.one(), self.ctx.from_int(-1)),
                                (q             , self.ctx.from_int(-1)))
        det = block.matrix[0][0].mul(block.matrix[1][1]).sub(block.matrix[0][1].mul(block.matrix[1][0]))
        assert det      == q.sub(1)
        assert det.val() == 0

    def test_build__tate_curve__explicit_q(self):
        q        = self.ctx.scalar(-25)
        complex_ = self.builder(2).build(Cech__Space__Spec.tate_curve(q=q))
        assert complex_.block(2).matrix[1][0] == q.pow(2)

    def test_build__bidisc_boundary(self):
        complex_ = self.builder(1).build(Cech__Space__Spec.bidisc_boundary())
        assert complex_.term_dims()           == (12, 9)
        assert complex_.block((-1, -1)).cols == ()
        assert complex_.block(( 0,  0)).cols == (('V1', (0, 0)), ('V2', (0, 0)))
        assert complex_.block((-1,  1)).cols == (('V1', (-1, 1)),)

    def test_d0_respects_grading(self):
        complex_ = self.builder(2).build(Cech__Space__Spec.tate_curve(vq=2))
        image    = complex_.apply_d0({('W1', 1): 1})
        assert set(image) == {('W12', 1), ('W12q', 1)}
        assert all(complex_.grade_of(label) == 1 for label in image)
        with self.assertRaises(Invalid__Spec):
            complex_.apply_d0({('W1', 7): 1})

    def test_constants_are_cocycles(self):
        for spec in (Cech__Space__Spec.proj_line()        ,
                     Cech__Space__Spec.annulus(0, 1, 3)   ,
                     Cech__Space__Spec.tate_curve(vq=3)   ,
                     Cech__Space__Spec.bidisc_boundary()  ):
            complex_ = self.builder(2).build(spec)
            assert complex_.apply_d0(complex_.constant_cochain()) == {}

    def test_full_matrix(self):
        complex_ = self.builder(1).build(Cech__Space__Spec.proj_line())
        full     = complex_.full_matrix()
        assert len(full)    == 3
        assert len(full[0]) == 4
        assert sum(1 for row in full for entry in row if not entry.is_zero()) == 4

    def test_build__errors(self):
        with self.assertRaises(Invalid__Spec):
            Cech__Builder(window=2).build(Cech__Space__Spec.proj_line())
        with self.assertRaises(Invalid__Spec):
            self.builder(0).build(Cech__Space__Spec.proj_line())
        with self.assertRaises(Invalid__Spec):
            self.builder(2).build(Cech__Space__Spec.tate_curve(vq='1/2'))
        with self.assertRaises(Invalid__Spec):
            self.builder(2).build(Cech__Space__Spec.proj_line()).block(5)
