# ═══════════════════════════════════════════════════════════════════════════════
# Cech__Space__Spec - which two-piece cover a Čech complex is built for
#
#   p1        {v(T) >= 0} ∪ {v(T) <= 0}                    the projective line
#   annulus   [a, s0] ∪ [s0, b]                            a Laurent cover of an annulus
#   tate      [vq/2, vq] ∪ [0, vq/2], glued by T -> qT     the Tate curve E_q
#   bidisc    {|x| = 1} ∪ {|y| = 1} in the closed bidisc    a non-affinoid boundary
# ═══════════════════════════════════════════════════════════════════════════════

from adic_spaces_toolkit.cech.Cech__Space__Kind         import Cech__Space__Kind
from adic_spaces_toolkit.padic.Rational__Val            import rational_val, is_finite, val_to_json
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Cech__Space__Spec(Type_Safe__Value):
    kind : Cech__Space__Kind = None
    a    : object            = None
    s0   : object            = None
    b    : object            = None
    vq   : object            = None
    q    : object            = None                                              # optional Padic__Scalar realising vq

    def __init__(self, kind=None, a=None, s0=None, b=None, vq=None, q=None):
        kind = Cech__Space__Kind(kind)
        if kind is Cech__Space__Kind.ANNULUS:
            a, s0, b = (rational_val(value) for value in (a, s0, b))
            if not (is_finite(a) and is_finite(b)):
                raise Invalid__Spec(f"annulus bounds must be finite, got a={a} b={b}")
            if not (a < s0 < b):
                raise Invalid__Spec(f"annulus cover needs a < s0 < b, got a={a} s0={s0} b={b}")
        if kind is Cech__Space__Kind.TATE_CURVE:
            if vq is None and q is None:
                raise Invalid__Spec("the Tate curve needs vq or q")
            vq = q.val() if vq is None else rational_val(vq)
            if not is_finite(vq) or vq <= 0:
                raise Invalid__Spec(f"the Tate curve needs 0 < v(q) < inf, got {vq}")
            if q is not None and q.val() != vq:
                raise Invalid__Spec(f"q has valuation {q.val()}, expected vq={vq}")
        super().__init__(kind=kind, a=a, s0=s0, b=b, vq=vq, q=q)

    @classmethod
    def proj_line(cls):
        return cls(Cech__Space__Kind.PROJ_LINE)

    @classmethod
    def annulus(cls, a, s0, b):
        return cls(Cech__Space__Kind.ANNULUS, a=a, s0=s0, b=b)

    @classmethod
    def tate_curve(cls, vq=None, q=None):
        return cls(Cech__Space__Kind.TATE_CURVE, vq=vq, q=q)

    @classmethod
    def bidisc_boundary(cls):
        return cls(Cech__Space__Kind.BIDISC_BOUNDARY)

    def is_bigraded(self) -> bool:
        return self.kind is Cech__Space__Kind.BIDISC_BOUNDARY

    def json(self):
        data = dict(kind=self.kind.value)
        if self.kind is Cech__Space__Kind.ANNULUS:
            data.update(a=val_to_json(self.a), s0=val_to_json(self.s0), b=val_to_json(self.b))
        if self.kind is Cech__Space__Kind.TATE_CURVE:
            data.update(vq=val_to_json(self.vq))
            if self.q is not None:
                data.update(q=self.q.json())
        return data
