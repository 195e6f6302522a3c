import logging
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.cech.Cech__Complex             import Cech__Complex
from adic_spaces_toolkit.cech.Cech__Grade__Block        import Cech__Grade__Block
from adic_spaces_toolkit.cech.Cech__Space__Kind         import Cech__Space__Kind
from adic_spaces_toolkit.cech.Cech__Space__Spec         import Cech__Space__Spec
from adic_spaces_toolkit.config                         import DEFAULT__WINDOW
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec

logger = logging.getLogger(__name__)


class Cech__Builder(Type_Safe):
    ctx    : Padic__Context = None
    window : int            = DEFAULT__WINDOW

    def build(self, spec: Cech__Space__Spec) -> Cech__Complex:                   # build_cech
        if self.ctx is None:
            raise Invalid__Spec("Cech__Builder needs an arithmetic context")
        if self.window < 1:
            raise Invalid__Spec(f"window must be >= 1, got {self.window}")
        builders = { Cech__Space__Kind.PROJ_LINE       : self.build_proj_line       ,
                     Cech__Space__Kind.ANNULUS         : self.build_annulus         ,
                     Cech__Space__Kind.TATE_CURVE      : self.build_tate_curve      ,
                     Cech__Space__Kind.BIDISC_BOUNDARY : self.build_bidisc_boundary }
        complex_ = builders[spec.kind](spec)
        logger.debug("built %s complex: window=%d term dims=%s", spec.kind.value, self.window, complex_.term_dims())
        return complex_

    # ═══════════════════════════════════════════════════════════════════════════════
    # One-variable covers
    # ═══════════════════════════════════════════════════════════════════════════════

    def build_proj_line(self, spec):
        pieces = (('U1', Chart.disc(0)), ('U2', Chart.disc_at_infinity(0)))
        return self.laurent_cover(spec, pieces, 'U12')

    def build_annulus(self, spec):
        pieces = (('U1', Chart.annulus(spec.a, spec.s0)), ('U2', Chart.annulus(spec.s0, spec.b)))
        return self.laurent_cover(spec, pieces, 'U12')

    def laurent_cover(self, spec, pieces, overlap):                              # (f, g) -> f|U12 - g|U12, one row per grade
        one, minus_one = self.ctx.one(), self.ctx.from_int(-1)
        blocks = []
        for grade in range(-self.window, self.window + 1):
            cols, entries = [], []
            for (name, chart), sign in zip(pieces, (one, minus_one)):
                if chart.allows_exponent(grade):
                    cols.append((name, grade))
                    entries.append(sign)
            blocks.append(Cech__Grade__Block(grade  = grade                ,
                                             cols   = tuple(cols)          ,
                                             rows   = ((overlap, grade),)  ,
                                             matrix = (tuple(entries),)    ))
        return self.complex(spec, tuple(name for name, _ in pieces), blocks)

    def build_tate_curve(self, spec):
        """W1 = [vq/2, vq] and W2 = [0, vq/2] meet along two circles.

        On v(T) = vq/2 the component is f1 - f2; on the circle v(T) = vq of W1,
        carried to v(T) = 0 by T -> qT, it is f1(qT) - f2. Grade i gives the
        block [[1, -1], [q^i, -1]] with determinant q^i - 1.
        """
        q          = self.tate_q(spec)
        one        = self.ctx.one()
        minus_one  = self.ctx.from_int(-1)
        blocks     = []
        for grade in range(-self.window, self.window + 1):
            blocks.append(Cech__Grade__Block(grade  = grade                                      ,
                                             cols   = (('W1', grade), ('W2', grade))             ,
                                             rows   = (('W12', grade), ('W12q', grade))          ,
                                             matrix = ((one          , minus_one),
                                                       (q.pow(grade) , minus_one))               ))
        return self.complex(spec, ('W1', 'W2'), blocks)

    def tate_q(self, spec):
        if spec.q is not None:
            return self.ctx.scalar(spec.q)
        if spec.vq.denominator != 1:
            raise Invalid__Spec(f"vq={spec.vq} is not integral: supply q explicitly")
        return self.ctx.p_to(spec.vq.numerator)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Bigraded cover
    # ═══════════════════════════════════════════════════════════════════════════════

    def build_bidisc_boundary(self, spec):
        """V1 = {|x| = 1} carries x^i y^j with j >= 0; V2 = {|y| = 1} carries i >= 0.

        Both restrict into V12 = {|x| = |y| = 1}, which carries every (i, j).
        Grades with i < 0 and j < 0 have no preimage and give H¹.
        """
        one, minus_one = self.ctx.one(), self.ctx.from_int(-1)
        window = self.window
        blocks = []
        for i in range(-window, window + 1):
            for j in range(-window, window + 1):
                grade   = (i, j)
                cols    = []
                entries = []
                if j >= 0:
                    cols.append(('V1', grade))
                    entries.append(one)
                if i >= 0:
                    cols.append(('V2', grade))
                    entries.append(minus_one)
                blocks.append(Cech__Grade__Block(grade  = grade              ,
                                                 cols   = tuple(cols)        ,
                                                 rows   = (('V12', grade),)  ,
                                                 matrix = (tuple(entries),)  ))
        return self.complex(spec, ('V1', 'V2'), blocks)

    def complex(self, spec, pieces, blocks):
        return Cech__Complex(spec   = spec         ,
                             window = self.window  ,
                             ctx    = self.ctx     ,
                             pieces = pieces       ,
                             blocks = tuple(blocks))
