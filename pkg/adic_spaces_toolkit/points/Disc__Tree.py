# ═══════════════════════════════════════════════════════════════════════════════
# Disc__Tree - seminorms, specialization order and tree geometry on the adic
# disc and on G_m (points of types 1, 2 and 5)
# ═══════════════════════════════════════════════════════════════════════════════

from math                                               import ceil, comb
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, val_min
from adic_spaces_toolkit.points.Disc__Point             import Disc__Point, COMPARE__EQUAL
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_1           import Point__Type_1
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2
from adic_spaces_toolkit.points.Point__Type_5           import Point__Type_5
from adic_spaces_toolkit.points.Rank2__Val              import Rank2__Val
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Invalid__Spec, Out_Of_Chart


class Disc__Tree(Type_Safe):
    ctx : Padic__Context = None

    # ═══════════════════════════════════════════════════════════════════════════════
    # Seminorms
    # ═══════════════════════════════════════════════════════════════════════════════

    def recentre(self, f: Laurent__Series, c) -> Laurent__Series:
        """Coefficients of f in powers of (T - c), by binomial re-expansion."""
        c = f.ctx.scalar(c)
        if c.is_zero():
            return f
        if not f.chart.is_disc():
            raise Chart__Mismatch(f"recentring at a nonzero center needs a disc chart, got {f.chart}")
        if c.val() < f.chart.a:
            raise Out_Of_Chart(f"center {c} is outside the disc {f.chart}")
        top    = max(f.exponents(), default=0)
        powers = [f.ctx.one()]
        for _ in range(top):
            powers.append(powers[-1].mul(c))
        coeffs = {}
        for k in range(top + 1):
            terms = []
            for i, coeff in f.coeffs.items():
                if i >= k:
                    terms.append(coeff.mul(comb(i, k)).mul(powers[i - k]))
            total = Padic__Scalar.sum_of(f.ctx, terms)
            if not total.is_zero():
                coeffs[k] = total
        return Laurent__Series(f.ctx, f.chart, f.window, coeffs, f.truncated)

    def seminorm_val(self, f: Laurent__Series, x: Disc__Point) -> Rank2__Val:
        self.check_in_chart(f, x)
        if isinstance(x, Point__Type_1):
            return Rank2__Val(f.evaluate(x.c).val(), 0)
        center = self.expansion_center(f, x)
        g      = self.recentre(f, center)
        if isinstance(x, Point__Type_2):
            return Rank2__Val(self.radius_val(g, x.r), 0)
        sign   = 1 if x.side is Point__Side.PLUS else -1
        best   = Rank2__Val.infinity()
        for i, coeff in g.coeffs.items():
            candidate = Rank2__Val(coeff.val() + i * x.r, sign * i)
            if candidate < best:
                best = candidate
        return best

    def radius_val(self, g: Laurent__Series, r):                                 # min_i v(d_i) + i*r, without the chart range check
        best = INFINITY
        for i, coeff in g.coeffs.items():
            value = coeff.val() + i * r
            if value < best:
                best = value
        return best

    def expansion_center(self, f: Laurent__Series, x: Disc__Point):
        """Center to expand f around; off the disc only 0-centered points are allowed.

        A point whose disc contains 0 (v(c) >= r, and v(c) > r for a plus
        direction) is the same point when centered at 0.
        """
        if f.chart.is_disc() or x.c.is_zero():
            return x.c
        if isinstance(x, Point__Type_5) and x.side is Point__Side.PLUS:
            moves = x.c.val() >= x.direction_level()
        else:
            moves = x.c.val() >= x.r
        if moves:
            return f.ctx.zero()
        if all(exponent >= 0 for exponent in f.coeffs):
            return x.c
        raise Chart__Mismatch(f"cannot recentre a Laurent series with negative powers at {x}")

    def check_in_chart(self, f: Laurent__Series, x: Disc__Point):
        position = x.chart_position()
        if not f.chart.contains_val(position):
            raise Out_Of_Chart(f"point {x} (v(T) = {position}) is outside chart {f.chart}")

    # ═══════════════════════════════════════════════════════════════════════════════
    # Specialization order
    # ═══════════════════════════════════════════════════════════════════════════════

    def compare(self, x: Disc__Point, y: Disc__Point) -> str:
        return x.compare(y)

    def max_generalization(self, x: Disc__Point) -> Disc__Point:
        return x.max_generalization()

    def specializes(self, x: Disc__Point, y: Disc__Point) -> bool:              # is y a specialization of x
        if x.compare(y) == COMPARE__EQUAL:
            return True
        if isinstance(x, Point__Type_2) and isinstance(y, Point__Type_5):
            return y.partner().compare(x) == COMPARE__EQUAL
        return False

    # ═══════════════════════════════════════════════════════════════════════════════
    # Tree geometry
    # ═══════════════════════════════════════════════════════════════════════════════

    def join(self, x: Disc__Point, y: Disc__Point) -> Disc__Point:              # smallest closed disc containing both
        for point in (x, y):
            if isinstance(point, Point__Type_5):
                raise Invalid__Spec(f"join is defined on the rank-1 tree, got {point}")
        if x.compare(y) == COMPARE__EQUAL:
            return x
        radius = val_min((x.avatar_radius(), y.avatar_radius(), x.c.sub(y.c).val()))
        if radius is INFINITY:
            return x
        if isinstance(x, Point__Type_2) and radius == x.r:
            return x
        return Point__Type_2(x.c, radius)

    def path_breakpoints(self, x: Disc__Point, y: Disc__Point) -> list:
        path = []
        for point in (x, self.join(x, y), y):
            if not path or path[-1].compare(point) != COMPARE__EQUAL:
                path.append(point)
        return path

    def gm_retract(self, x: Disc__Point):                                        # retraction of G_m onto the skeleton {η(0, s)}
        x = x.max_generalization()
        if x.c.is_zero():
            if isinstance(x, Point__Type_1):
                raise Out_Of_Chart("the origin is not a point of G_m")
            return x.r
        return val_min((x.avatar_radius(), x.c.val()))

    def in_gm_exhaustion(self, x: Disc__Point, level: int) -> bool:             # x ∈ {v(T) ∈ [-level, level]}
        return Chart(-level, level).contains_val(self.gm_retract(x))

    def gm_exhaustion_level(self, x: Disc__Point) -> int:                       # least n with x in the n-th affinoid of G_m
        return ceil(abs(self.gm_retract(x)))

    def gm_exhaustion_chart(self, level: int) -> Chart:
        if level < 0:
            raise Invalid__Spec(f"exhaustion level must be >= 0, got {level}")
        return Chart(-level, level)
