# ═══════════════════════════════════════════════════════════════════════════════
# Tate__Curve - E_q = G_m / q^Z, its skeleton and its break-point models
#
# A point of G_m is a lift of a point of E_q; the action T -> q^m T moves the
# retraction to the skeleton by m*vq. The skeleton of E_q is the circle
# R / vq Z, a model of E_q is a finite set of break points on it: each break
# is a P¹ component and each arc between consecutive breaks is a node.
# ═══════════════════════════════════════════════════════════════════════════════

import logging
from fractions                                          import Fraction
from math                                               import floor
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.models.Dual__Graph             import Dual__Graph
from adic_spaces_toolkit.models.Special_Fiber__Kind     import Special_Fiber__Kind
from adic_spaces_toolkit.models.Specialization__Target  import Specialization__Target
from adic_spaces_toolkit.models.Tate__Params            import Tate__Params
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Rational__Val            import rational_val, is_finite
from adic_spaces_toolkit.points.Disc__Point             import Disc__Point
from adic_spaces_toolkit.points.Disc__Tree              import Disc__Tree
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_1           import Point__Type_1
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2
from adic_spaces_toolkit.points.Point__Type_5           import Point__Type_5
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec, Out_Of_Chart

logger = logging.getLogger(__name__)

TATE_COVER__W1          = 'W1'
TATE_COVER__W2          = 'W2'
TATE_COVER__W12         = 'W12'
TATE_COVER__W12_GLUED   = 'W12q'
TATE_COVER__PROPER      = ((Fraction(-1, 5), Fraction(3, 5)),                    # V_n as fractions of vq, for n = 0, 1
                           (Fraction( 2, 5), Fraction(6, 5)))


class Tate__Curve(Type_Safe):
    ctx : Padic__Context = None

    def disc_tree(self) -> Disc__Tree:
        return Disc__Tree(ctx=self.ctx)

    # ═══════════════════════════════════════════════════════════════════════════════
    # The q^Z action and the quotient
    # ═══════════════════════════════════════════════════════════════════════════════

    def action(self, x: Disc__Point, m: int, params: Tate__Params) -> Disc__Point:        # tate_action: T -> q^m T
        if m == 0:
            return x
        if isinstance(x, Point__Type_1) and x.c.is_zero():
            raise Out_Of_Chart("the origin is not a point of G_m")
        if self.centered_at_zero(x):
            center = self.ctx.zero()
        else:
            center = x.c.mul(params.require_q().pow(m))
        if isinstance(x, Point__Type_1):
            return Point__Type_1(center)
        radius = x.r + m * params.vq
        if isinstance(x, Point__Type_5):
            return Point__Type_5(center, radius, x.side)
        return Point__Type_2(center, radius)

    def centered_at_zero(self, x: Disc__Point) -> bool:                          # is x the same point with center 0
        if isinstance(x, Point__Type_1):
            return x.c.is_zero()
        if x.c.is_zero():
            return True
        level = x.direction_level() if isinstance(x, Point__Type_5) else x.r
        return x.c.val() >= level

    def orbit_normalize(self, x: Disc__Point, params: Tate__Params) -> tuple:    # tate_orbit_normalize -> (representative, sheet)
        sheet = floor(self.disc_tree().gm_retract(x) / params.vq)
        return self.action(x, -sheet, params), sheet

    def retract(self, x: Disc__Point, params: Tate__Params) -> Fraction:        # tate_retract, in [0, vq)
        return self.circle_coordinate(self.disc_tree().gm_retract(x), params)

    def circle_coordinate(self, s, params: Tate__Params) -> Fraction:
        s = rational_val(s)
        return s - floor(s / params.vq) * params.vq

    def universal_cover_lift(self, s, sheet: int, params: Tate__Params) -> Fraction:
        s = rational_val(s)
        if not (is_finite(s) and 0 <= s < params.vq):
            raise Invalid__Spec(f"skeleton coordinate must lie in [0, {params.vq}), got {s}")
        return s + sheet * params.vq

    # ═══════════════════════════════════════════════════════════════════════════════
    # Covers
    # ═══════════════════════════════════════════════════════════════════════════════

    def cover_chart(self, n: int, params: Tate__Params) -> Chart:                # U_n: v(T) ∈ [n vq/2, (n+1) vq/2]
        return Chart.annulus(n * params.vq / 2, (n + 1) * params.vq / 2)

    def cover_disjoint(self, n: int, m: int, params: Tate__Params) -> bool:     # tate_cover_disjoint: m·U_n ∩ U_n = ∅
        chart      = self.cover_chart(n, params)
        translated = chart.shift(m * params.vq)
        return translated.b < chart.a or chart.b < translated.a

    def fundamental_cover(self, params: Tate__Params) -> dict:
        vq = params.vq
        return { TATE_COVER__W1        : Chart.annulus(vq / 2, vq),
                 TATE_COVER__W2        : Chart.annulus(0, vq / 2),
                 TATE_COVER__W12       : Chart.circle(vq / 2)    ,
                 TATE_COVER__W12_GLUED : Chart.circle(0)         }              # v(T) = vq on W1, moved to 0 by T -> T/q

    def proper_cover_chart(self, n: int, params: Tate__Params) -> Chart:
        if n not in (0, 1):
            raise Invalid__Spec(f"the proper cover has pieces V_0 and V_1, got n={n}")
        low, high = TATE_COVER__PROPER[n]
        return Chart.annulus(low * params.vq, high * params.vq)

    def relatively_compact(self, n: int, params: Tate__Params) -> bool:          # U_n inside the interior of V_n
        inner = self.cover_chart(n, params)
        outer = self.proper_cover_chart(n, params)
        return outer.a < inner.a and inner.b < outer.b

    # ═══════════════════════════════════════════════════════════════════════════════
    # Break-point models
    # ═══════════════════════════════════════════════════════════════════════════════

    def check_breaks(self, breaks, params: Tate__Params) -> list:
        values = sorted(rational_val(value) for value in breaks)
        if not values:
            raise Invalid__Spec("a Tate curve model needs at least one break point")
        for value in values:
            if not (is_finite(value) and 0 <= value < params.vq):
                raise Invalid__Spec(f"break points must lie in [0, {params.vq}), got {value}")
        if len(set(values)) != len(values):
            raise Invalid__Spec(f"break points must be distinct, got {[str(value) for value in values]}")
        return values

    def break_label(self, value) -> str:
        return f"η(0, {Fraction(value)})"

    def arc_label(self, index: int, breaks: list, params: Tate__Params) -> str:   # the arc from breaks[index] to the next break
        start = breaks[index]
        end   = breaks[index + 1] if index + 1 < len(breaks) else breaks[0] + params.vq
        return f"({Fraction(start)}, {Fraction(end)})"

    def dual_graph(self, breaks, params: Tate__Params) -> Dual__Graph:          # tate_dual_graph
        """Cycle graph of the model: one vertex per break η(0, b), one edge per arc between consecutive breaks."""
        breaks   = self.check_breaks(breaks, params)
        vertices = tuple((self.break_label(value), Special_Fiber__Kind.PROJ_LINE) for value in breaks)
        edges    = []
        for index, value in enumerate(breaks):
            following = breaks[(index + 1) % len(breaks)]
            edges.append((self.break_label(value), self.break_label(following), self.arc_label(index, breaks, params)))
        return Dual__Graph(vertices, tuple(edges))

    def arc_index(self, s, breaks: list) -> int:                                 # arc whose interior holds s (s not a break)
        index = len(breaks) - 1
        for position, value in enumerate(breaks):
            if value < s:
                index = position
        return index

    def node_on_arc(self, index: int, breaks: list, params: Tate__Params) -> Specialization__Target:
        start = breaks[index]
        end   = breaks[(index + 1) % len(breaks)]
        return Specialization__Target.node_between(self.break_label(start), self.break_label(end), self.arc_label(index, breaks, params))

    def tate_specialize(self, x: Disc__Point, breaks, params: Tate__Params) -> Specialization__Target:
        """Specialization of a point of E_q (given by a lift) to the break-point model.

        Points retracting into the interior of an arc go to the node of that arc.
        At a break b the Gauss point η(0, b) goes to the generic point of its
        component, the two skeleton directions at η(0, b) to the nodes on either
        side, and every other branch to a closed point labelled by its residue.
        """
        breaks         = self.check_breaks(breaks, params)
        representative = self.orbit_normalize(x, params)[0]
        s              = self.disc_tree().gm_retract(representative)
        if s not in breaks:
            return self.node_on_arc(self.arc_index(s, breaks), breaks, params)
        index = breaks.index(s)
        if isinstance(representative, Point__Type_5) and self.centered_at_zero(representative.partner()):
            if representative.side is Point__Side.MINUS:
                return self.node_on_arc((index - 1) % len(breaks), breaks, params)
            if self.centered_at_zero(representative):
                return self.node_on_arc(index, breaks, params)
        elif isinstance(representative, Point__Type_2) and self.centered_at_zero(representative):
            return Specialization__Target.generic_of(self.break_label(s))
        residue = representative.c.unit % self.ctx.prime
        return Specialization__Target.closed_point_of(self.break_label(s), residue)

    def w_model_breaks(self, params: Tate__Params) -> list:                      # the model glued from W1 and W2
        return [Fraction(0), params.vq / 2]
