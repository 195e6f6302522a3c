# ═══════════════════════════════════════════════════════════════════════════════
# Disc__Models - formal models of the unit disc and reductions of annuli
#
#   dual_tree        vertices of the model become components (root A¹, the rest P¹),
#                    each vertex is joined to its tightest enclosing vertex
#   specialize       sp: point of the disc -> point of the special fibre
#   reduce_annulus   disc -> Line, circle -> Torus, strict annulus -> Nodal
#   reduce_function  f ∈ K°⟨T/p^a, p^b/T⟩ -> (s-part, t-part) in k[s, t]/(st)
# ═══════════════════════════════════════════════════════════════════════════════

import logging
from sympy                                              import Poly, symbols
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.models.Annulus__Reduction      import Annulus__Reduction
from adic_spaces_toolkit.models.Disc__Model__Spec       import Disc__Model__Spec
from adic_spaces_toolkit.models.Dual__Graph             import Dual__Graph
from adic_spaces_toolkit.models.Special_Fiber__Kind     import Special_Fiber__Kind
from adic_spaces_toolkit.models.Specialization__Target  import Specialization__Target
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.points.Disc__Point             import COMPARE__EQUAL, Disc__Point
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2
from adic_spaces_toolkit.points.Point__Type_5           import Point__Type_5
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Invalid__Spec, Out_Of_Chart

logger = logging.getLogger(__name__)

SYMBOL__S, SYMBOL__T = symbols('s t')


class Disc__Models(Type_Safe):
    ctx : Padic__Context = None

    # ═══════════════════════════════════════════════════════════════════════════════
    # Disc models
    # ═══════════════════════════════════════════════════════════════════════════════

    def model(self, points=()) -> Disc__Model__Spec:
        return Disc__Model__Spec.closure(self.ctx, points)

    def dual_tree(self, spec: Disc__Model__Spec) -> Dual__Graph:                 # disc_model_dual_tree
        root     = spec.root()
        vertices = []
        for vertex in spec.vertices:
            kind = Special_Fiber__Kind.LINE if vertex is root else Special_Fiber__Kind.PROJ_LINE
            vertices.append((spec.label(vertex), kind))
        edges = [(spec.label(parent), spec.label(child), None) for parent, child in spec.edges()]
        return Dual__Graph(tuple(vertices), tuple(edges))

    def blow_up(self, spec: Disc__Model__Spec, a, level: int = 0) -> Disc__Model__Spec:
        """Blow up the closed point a of the level-`level` component: adds η(a, level + 1)."""
        if level < 0:
            raise Invalid__Spec(f"blowup level must be >= 0, got {level}")
        center = self.ctx.scalar(a)
        if center.val() < 0:
            raise Out_Of_Chart(f"blowup center {center} is outside the unit disc")
        blown_up = spec.with_vertex(Point__Type_2(center, level + 1))
        logger.debug("blow up at (p^%d, T - %s): %d -> %d vertices", level + 1, center, len(spec), len(blown_up))
        return blown_up

    def specialize(self, spec: Disc__Model__Spec, x: Disc__Point) -> Specialization__Target:
        self.check_in_unit_disc(x)
        vertex = self.smallest_vertex(spec, x)
        if type(x) is Point__Type_2 and x.r == vertex.r:
            return Specialization__Target.generic_of(spec.label(vertex))
        for child in spec.children(vertex):
            if Disc__Point.agreement(x.c.sub(child.c), vertex.r + 1) == COMPARE__EQUAL:
                return Specialization__Target.node_between(spec.label(vertex), spec.label(child))
        return Specialization__Target.closed_point_of(spec.label(vertex), self.residue_label(x, vertex))

    def smallest_vertex(self, spec: Disc__Model__Spec, x: Disc__Point) -> Point__Type_2:
        """Tightest model disc holding the rank-1 avatar of x.

        η(c, r)- sits at radius r - δ, so a vertex of radius r does not hold it;
        η(c, r)+ sits at r + δ and is held by the vertices of radius <= r.
        """
        best = spec.root()
        for vertex in spec.vertices:
            if vertex.r <= best.r or not self.holds(vertex, x):
                continue
            best = vertex
        return best

    def holds(self, vertex: Point__Type_2, x: Disc__Point) -> bool:
        radius = x.avatar_radius()
        if isinstance(x, Point__Type_5) and x.side is Point__Side.MINUS:
            if radius <= vertex.r:
                return False
        elif radius < vertex.r:
            return False
        return Disc__Point.agreement(x.c.sub(vertex.c), vertex.r) == COMPARE__EQUAL

    def residue_label(self, x: Disc__Point, vertex: Point__Type_2) -> int:      # residue of (c - c_V) / p^r_V
        difference = x.c.sub(vertex.c)
        if difference.is_zero() or difference.v > vertex.r:
            return 0
        return difference.unit % self.ctx.prime

    def check_in_unit_disc(self, x: Disc__Point):
        radius = x.avatar_radius()
        if x.c.val() < 0 or radius < 0:
            raise Out_Of_Chart(f"point {x} is outside the unit disc")
        if radius == 0 and isinstance(x, Point__Type_5) and x.side is Point__Side.MINUS:
            raise Out_Of_Chart(f"point {x} points out of the unit disc")

    # ═══════════════════════════════════════════════════════════════════════════════
    # Annuli
    # ═══════════════════════════════════════════════════════════════════════════════

    def reduce_annulus(self, chart: Chart) -> Special_Fiber__Kind:
        if not chart.is_integral():
            raise Invalid__Spec(f"reductions need integral chart bounds, got {chart}")
        if chart.is_circle():
            return Special_Fiber__Kind.TORUS
        if chart.is_annulus():
            return Special_Fiber__Kind.NODAL
        return Special_Fiber__Kind.LINE

    def reduce_function(self, f: Laurent__Series) -> Annulus__Reduction:
        chart = f.chart
        if not chart.is_annulus():
            raise Chart__Mismatch(f"reduce_function needs a strict annulus, got {chart}")
        if not chart.is_integral():
            raise Invalid__Spec(f"reductions need integral chart bounds, got {chart}")
        if not f.is_power_bounded():
            raise Invalid__Spec(f"{f} is not integral on {chart}")
        prime     = self.ctx.prime
        s_terms   = {}
        t_terms   = {}
        for exponent, coeff in f.coeffs.items():
            residue = coeff.unit % prime
            if exponent >= 0 and coeff.val() + exponent * chart.a == 0:
                s_terms[exponent] = residue
            if exponent <= 0 and coeff.val() + exponent * chart.b == 0:
                t_terms[-exponent] = residue
        constant = s_terms.get(0, 0)
        s_poly   = Poly(sum((c * SYMBOL__S ** d for d, c in s_terms.items()), 0), SYMBOL__S, modulus=prime)
        t_poly   = Poly(sum((c * SYMBOL__T ** d for d, c in t_terms.items()), 0), SYMBOL__T, modulus=prime)
        return Annulus__Reduction(prime=prime, s_poly=s_poly, t_poly=t_poly, constant=constant)

