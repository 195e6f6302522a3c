# ═══════════════════════════════════════════════════════════════════════════════
# Laurent__Series - truncated Laurent series  Σ c_i T^i,  i ∈ [-window, window]
#
# The stand-in for the Banach ring O_X(U) of a chart: coefficients are p-adic
# scalars, absent exponents are zero, and every operation that has to discard
# an exponent outside the window sets `truncated` instead of failing
# ═══════════════════════════════════════════════════════════════════════════════

from fractions                                          import Fraction
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, is_infinite, val_min
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Invalid__Spec, Out_Of_Chart, Padic__Division_By_Zero


class Laurent__Series:
    __slots__ = ('ctx', 'chart', 'window', 'coeffs', 'truncated')

    def __init__(self, ctx, chart: Chart, window: int, coeffs: dict = None, truncated: bool = False):
        if window < 0:
            raise Invalid__Spec(f"window must be >= 0, got {window}")
        self.ctx       = ctx
        self.chart     = chart
        self.window    = window
        self.coeffs    = {}
        self.truncated = truncated
        for exponent, coeff in (coeffs or {}).items():
            coeff = ctx.scalar(coeff)
            if coeff.is_zero():
                continue
            if abs(exponent) > window:
                raise Invalid__Spec(f"exponent {exponent} outside the window [-{window}, {window}]")
            if not chart.allows_exponent(exponent):
                raise Chart__Mismatch(f"exponent {exponent} is not allowed on chart {chart}")
            self.coeffs[exponent] = coeff

    @classmethod
    def zero(cls, ctx, chart, window):
        return cls(ctx, chart, window)

    @classmethod
    def one(cls, ctx, chart, window):
        return cls(ctx, chart, window, {0: ctx.one()})

    @classmethod
    def monomial(cls, ctx, chart, window, exponent, coeff=1):
        return cls(ctx, chart, window, {exponent: coeff})

    def _like(self, coeffs, truncated=False, chart=None, window=None):         # internal builder, coeffs already nonzero scalars
        series           = Laurent__Series.__new__(Laurent__Series)
        series.ctx       = self.ctx
        series.chart     = chart  if chart  is not None else self.chart
        series.window    = window if window is not None else self.window
        series.coeffs    = coeffs
        series.truncated = truncated
        return series

    # ═══════════════════════════════════════════════════════════════════════════════
    # Accessors
    # ═══════════════════════════════════════════════════════════════════════════════

    def coefficient(self, exponent: int) -> Padic__Scalar:
        coeff = self.coeffs.get(exponent)
        return self.ctx.zero() if coeff is None else coeff

    def exponents(self) -> list:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def part(self, keep) -> 'Laurent__Series':                                   # sub-series of the exponents where keep(i) holds
        return self._like({i: c for i, c in self.coeffs.items() if keep(i)}, self.truncated)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Norms
    # ═══════════════════════════════════════════════════════════════════════════════

    def gauss_val(self, s):                                                      # min_i v(c_i) + i*s
        if not self.chart.contains_val(s):
            raise Out_Of_Chart(f"radius parameter {s} outside chart {self.chart}")
        values = []
        for exponent, coeff in self.coeffs.items():
            if exponent == 0:
                values.append(coeff.val())
            else:
                values.append(coeff.val() + exponent * s)
        return val_min(values)

    def term_sup_val(self, exponent: int, coeff: Padic__Scalar):
        return coeff.val() + self.chart.exponent_offset(exponent)

    def sup_val(self):                                                           # minimum of gauss_val over the chart, attained at an endpoint
        chart = self.chart
        if chart.is_disc():
            return self.gauss_val(chart.a)
        if chart.is_disc_at_infinity():
            return self.gauss_val(chart.b)
        return val_min((self.gauss_val(chart.a), self.gauss_val(chart.b)))

    def is_power_bounded(self) -> bool:
        return self.sup_val() >= 0

    # ═══════════════════════════════════════════════════════════════════════════════
    # Ring operations
    # ═══════════════════════════════════════════════════════════════════════════════

    def check_compatible(self, other: 'Laurent__Series'):
        if not isinstance(other, Laurent__Series):
            raise TypeError(f"expected a Laurent__Series, got {type(other).__name__}")
        if self.chart != other.chart:
            raise Chart__Mismatch(f"series on chart {self.chart} combined with chart {other.chart}")
        if self.window != other.window:
            raise Chart__Mismatch(f"series with window {self.window} combined with window {other.window}")
        other_ctx = other.ctx
        if other_ctx is not self.ctx and other_ctx != self.ctx:
            raise Chart__Mismatch(f"series in context {self.ctx} combined with {other_ctx}")

    def add(self, other: 'Laurent__Series') -> 'Laurent__Series':
        self.check_compatible(other)
        coeffs = dict(self.coeffs)
        for exponent, coeff in other.coeffs.items():
            current = coeffs.get(exponent)
            total   = coeff if current is None else current.add(coeff)
            if total.is_zero():
                coeffs.pop(exponent, None)
            else:
                coeffs[exponent] = total
        return self._like(coeffs, self.truncated or other.truncated)

    def neg(self) -> 'Laurent__Series':
        return self._like({i: c.neg() for i, c in self.coeffs.items()}, self.truncated)

    def sub(self, other: 'Laurent__Series') -> 'Laurent__Series':
        return self.add(other.neg())

    def scalar_mul(self, scalar) -> 'Laurent__Series':
        scalar = self.ctx.scalar(scalar)
        coeffs = {}
        for exponent, coeff in self.coeffs.items():
            product = coeff.mul(scalar)
            if not product.is_zero():
                coeffs[exponent] = product
        return self._like(coeffs, self.truncated)

    def mul(self, other: 'Laurent__Series', val_cap=None) -> 'Laurent__Series':
        """Convolution truncated to the window.

        Products landing outside [-window, window] are dropped and set the
        truncation flag. With `val_cap`, products whose sup valuation over the
        chart is >= val_cap are dropped too: they are O(p^val_cap) and do not
        set the flag.
        """
        self.check_compatible(other)
        ctx       = self.ctx
        chart     = self.chart
        window    = self.window
        truncated = self.truncated or other.truncated
        buckets   = {}
        offsets   = {}
        left      = [(i, c.v, c.unit, c.prec) for i, c in self.coeffs.items()]
        right     = [(j, c.v, c.unit, c.prec) for j, c in other.coeffs.items()]
        for i, v_i, u_i, p_i in left:
            for j, v_j, u_j, p_j in right:
                k = i + j
                v = v_i + v_j
                if val_cap is not None:
                    offset = offsets.get(k)
                    if offset is None:
                        offset = offsets[k] = _as_int(chart.exponent_offset(k))
                    if v + offset >= val_cap:
                        continue
                if k > window or k < -window:
                    truncated = True
                    continue
                buckets.setdefault(k, []).append((v, u_i * u_j, p_i if p_i < p_j else p_j))
        coeffs = {}
        for k, terms in buckets.items():
            total = Padic__Scalar.sum_raw(ctx, terms)
            if not total.is_zero():
                coeffs[k] = total
        return self._like(coeffs, truncated)

    def pow(self, exponent: int, val_cap=None) -> 'Laurent__Series':
        if exponent < 0:
            raise Invalid__Spec("negative powers of a series are not supported")
        result = Laurent__Series.one(self.ctx, self.chart, self.window)
        for _ in range(exponent):
            result = result.mul(self, val_cap=val_cap)
        return result

    def prune(self, cap) -> 'Laurent__Series':                                   # drop terms that are O(p^cap) on the chart
        coeffs = {i: c for i, c in self.coeffs.items() if self.term_sup_val(i, c) < cap}
        return self._like(coeffs, self.truncated)

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __mul__(self, other):
        if isinstance(other, Laurent__Series):
            return self.mul(other)
        return self.scalar_mul(other)

    __rmul__ = scalar_mul

    def __neg__(self):
        return self.neg()

    def __eq__(self, other):                                                     # equal at working precision, same chart and window
        if not isinstance(other, Laurent__Series):
            return NotImplemented
        if self.chart != other.chart or self.window != other.window:
            return False
        return self.sub(other).is_zero()

    __hash__ = None

    # ═══════════════════════════════════════════════════════════════════════════════
    # Chart operations
    # ═══════════════════════════════════════════════════════════════════════════════

    def restrict(self, sub: Chart) -> 'Laurent__Series':
        if not self.chart.contains_chart(sub):
            raise Chart__Mismatch(f"chart {sub} is not contained in {self.chart}")
        return self._like(dict(self.coeffs), self.truncated, chart=sub)

    def with_chart(self, chart: Chart) -> 'Laurent__Series':                     # same coefficients, any chart that allows them
        return Laurent__Series(self.ctx, chart, self.window, self.coeffs, self.truncated)

    def with_window(self, window: int) -> 'Laurent__Series':
        coeffs    = {i: c for i, c in self.coeffs.items() if abs(i) <= window}
        truncated = self.truncated or len(coeffs) < len(self.coeffs)
        return self._like(coeffs, truncated, window=window)

    def scale_variable(self, factor) -> 'Laurent__Series':
        """Substitute T -> λT.

        The coefficient at i becomes c_i λ^i. The chart is shifted by -v(λ) so
        the series describes the same function on the same point set:
        v(T_new) = v(T_old) - v(λ).
        """
        factor = self.ctx.scalar(factor)
        if factor.is_zero():
            raise Invalid__Spec("scale_variable needs a nonzero factor")
        coeffs = {}
        for exponent, coeff in self.coeffs.items():
            product = coeff.mul(factor.pow(exponent))
            if not product.is_zero():
                coeffs[exponent] = product
        return self._like(coeffs, self.truncated, chart=self.chart.shift(-factor.val()))

    def split_laurent(self) -> tuple:
        """Split f on a circle [s,s] as f = f_plus - f_minus.

        f_plus keeps the exponents >= 0 on the disc [s, +inf]; f_minus is the
        negated strictly negative part on the disc at infinity [-inf, s].
        """
        chart = self.chart
        if not chart.is_circle():
            raise Chart__Mismatch(f"split_laurent needs a circle chart, got {chart}")
        plus  = {i: c       for i, c in self.coeffs.items() if i >= 0}
        minus = {i: c.neg() for i, c in self.coeffs.items() if i <  0}
        f_plus  = self._like(plus , self.truncated, chart=Chart.disc(chart.a))
        f_minus = self._like(minus, self.truncated, chart=Chart.disc_at_infinity(chart.b))
        return f_plus, f_minus

    def evaluate(self, point) -> Padic__Scalar:                                  # Σ c_i point^i at a classical point
        point = self.ctx.scalar(point)
        if point.is_zero() and any(exponent < 0 for exponent in self.coeffs):
            raise Padic__Division_By_Zero("negative powers evaluated at 0")
        return Padic__Scalar.sum_of(self.ctx, [coeff.mul(point.pow(exponent)) for exponent, coeff in self.coeffs.items()])

    # ═══════════════════════════════════════════════════════════════════════════════
    # Rendering
    # ═══════════════════════════════════════════════════════════════════════════════

    def json(self):
        return dict(chart     = self.chart.json()                                          ,
                    window    = self.window                                                ,
                    coeffs    = [[i, self.coeffs[i].json()] for i in self.exponents()]     ,
                    truncated = self.truncated                                             )

    def terms_text(self) -> str:
        parts = []
        for exponent in self.exponents():
            coeff = str(self.coeffs[exponent].to_fraction())
            parts.append(coeff if exponent == 0 else f"{coeff}*T^{exponent}")
        return ' + '.join(parts) if parts else '0'

    def __str__(self):
        return f"{self.terms_text()} on chart {self.chart}"

    def __repr__(self):
        return f"Laurent__Series({self})"


def _as_int(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value
