# ═══════════════════════════════════════════════════════════════════════════════
# Chart - disc / annulus / circle of definition, parameterised by valuation bounds
#
#   [a, +inf]   closed disc        {v(T) >= a}     exponents >= 0
#   [-inf, b]   closed disc at ∞   {v(T) <= b}     exponents <= 0
#   [a, b]      annulus            {a <= v(T) <= b}
#   [s, s]      circle             {v(T) = s}
# ═══════════════════════════════════════════════════════════════════════════════

from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, NEG_INFINITY, rational_val, val_to_json, is_finite
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec, Parse__Error
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Chart(Type_Safe__Value):
    a : object = None                                                            # lower bound on v(T), NEG_INFINITY for a disc at ∞
    b : object = None                                                            # upper bound on v(T), INFINITY for a disc

    def __init__(self, a=None, b=None):
        a = rational_val(a)
        b = rational_val(b)
        if a is INFINITY or b is NEG_INFINITY:
            raise Invalid__Spec(f"chart bounds out of range: [{a}, {b}]")
        if a is NEG_INFINITY and b is INFINITY:
            raise Invalid__Spec("the whole projective line is not a chart")
        if a > b:
            raise Invalid__Spec(f"chart needs a <= b, got [{a}, {b}]")
        super().__init__(a=a, b=b)

    @classmethod
    def disc(cls, a=0):
        return cls(a, INFINITY)

    @classmethod
    def disc_at_infinity(cls, b=0):
        return cls(NEG_INFINITY, b)

    @classmethod
    def circle(cls, s=0):
        return cls(s, s)

    @classmethod
    def annulus(cls, a, b):
        return cls(a, b)

    @classmethod
    def parse(cls, text: str):                                                   # "[0,1]", "[0,+inf]", "[-inf,0]"
        body = text.strip()
        if not (body.startswith('[') and body.endswith(']')) or body.count(',') != 1:
            raise Parse__Error(f"chart must look like [a,b], got {text!r}")
        a, b = body[1:-1].split(',')
        return cls(rational_val(a), rational_val(b))

    # ═══════════════════════════════════════════════════════════════════════════════
    # Shape
    # ═══════════════════════════════════════════════════════════════════════════════

    def is_disc(self) -> bool:
        return self.b is INFINITY

    def is_disc_at_infinity(self) -> bool:
        return self.a is NEG_INFINITY

    def is_circle(self) -> bool:
        return self.a == self.b

    def is_annulus(self) -> bool:                                                # strict annulus, both bounds finite
        return is_finite(self.a) and is_finite(self.b) and self.a < self.b

    def finite_endpoints(self) -> tuple:
        return tuple(bound for bound in (self.a, self.b) if is_finite(bound))

    def allows_exponent(self, exponent: int) -> bool:
        if self.is_disc():
            return exponent >= 0
        if self.is_disc_at_infinity():
            return exponent <= 0
        return True

    def contains_val(self, s) -> bool:
        return self.a <= s <= self.b

    def contains_chart(self, sub: 'Chart') -> bool:
        return self.a <= sub.a and sub.b <= self.b

    def shift(self, delta) -> 'Chart':
        return Chart(self.a + delta, self.b + delta)

    def exponent_offset(self, exponent: int):                                   # min over the chart of exponent * v(T)
        if exponent == 0:
            return 0
        offsets = [exponent * bound for bound in self.finite_endpoints()]
        if not self.is_disc() and not self.is_disc_at_infinity():
            return min(offsets)
        if self.allows_exponent(exponent):
            return offsets[0]
        return NEG_INFINITY

    def is_integral(self) -> bool:
        return all(bound.denominator == 1 for bound in self.finite_endpoints())

    # ═══════════════════════════════════════════════════════════════════════════════
    # Rendering
    # ═══════════════════════════════════════════════════════════════════════════════

    def json(self):
        return [val_to_json(self.a), val_to_json(self.b)]

    def __str__(self):
        return f"[{val_to_json(self.a)},{val_to_json(self.b)}]"