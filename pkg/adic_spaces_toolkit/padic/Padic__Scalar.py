# ═══════════════════════════════════════════════════════════════════════════════
# Padic__Scalar - p-adic number at fixed relative precision ("floating point p-adic")
#
#   value = unit * p^v + O(p^(v + prec))      unit coprime to p, 0 <= unit < p^prec
#
# A zero has v = +inf and unit = 0; `prec` then holds the absolute precision the
# zero is known to (+inf for an exact zero, k for O(p^k) left by a cancellation)
# ═══════════════════════════════════════════════════════════════════════════════

from fractions                                          import Fraction
from functools                                          import lru_cache
from math                                               import ceil
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, Val__Infinity
from adic_spaces_toolkit.utils.Toolkit__Errors          import Context__Mismatch, Padic__Division_By_Zero, Out_Of_Chart, Parse__Error


@lru_cache(maxsize=8192)
def p_power(prime: int, exponent: int) -> int:
    return prime ** exponent

def p_valuation_int(value: int, prime: int) -> int:                              # v_p of a nonzero integer
    count = 0
    while value % prime == 0:
        value //= prime
        count += 1
    return count


class Padic__Scalar:
    __slots__ = ('ctx', 'v', 'unit', 'prec')

    def __init__(self, ctx, v, unit: int, prec):
        self.ctx  = ctx
        self.v    = v
        self.unit = unit
        self.prec = prec

    # ═══════════════════════════════════════════════════════════════════════════════
    # Construction helpers
    # ═══════════════════════════════════════════════════════════════════════════════

    @classmethod
    def exact_zero(cls, ctx):
        return cls(ctx, INFINITY, 0, INFINITY)

    @classmethod
    def inexact_zero(cls, ctx, absolute_precision):
        return cls(ctx, INFINITY, 0, absolute_precision)

    @classmethod
    def sum_raw(cls, ctx, terms, absolute_bound=INFINITY):                       # terms: iterable of (v, unit, prec) with finite v
        prime    = ctx.prime
        abs_prec = absolute_bound
        lowest   = None
        collected = []
        for v, unit, prec in terms:
            term_abs = v + prec
            if term_abs < abs_prec:
                abs_prec = term_abs
            if lowest is None or v < lowest:
                lowest = v
            collected.append((v, unit))
        if lowest is None:
            return cls(ctx, INFINITY, 0, abs_prec)
        if abs_prec <= lowest:
            return cls.inexact_zero(ctx, abs_prec)
        relative = abs_prec - lowest
        total    = 0
        for v, unit in collected:
            shift = v - lowest
            if shift < relative:
                total += unit * p_power(prime, shift)
        total %= p_power(prime, relative)
        if total == 0:
            return cls.inexact_zero(ctx, abs_prec)
        k = p_valuation_int(total, prime)
        return cls(ctx, lowest + k, total // p_power(prime, k), relative - k)

    @classmethod
    def sum_of(cls, ctx, scalars):                                               # padic_sum: one revaluation for many operands
        bound = INFINITY
        terms = []
        for scalar in scalars:
            scalar.check_context(ctx)
            if scalar.v is INFINITY:
                if scalar.prec < bound:
                    bound = scalar.prec
            else:
                terms.append((scalar.v, scalar.unit, scalar.prec))
        return cls.sum_raw(ctx, terms, bound)

    @classmethod
    def from_json(cls, ctx, data):
        try:
            v, unit, prec = data
        except (TypeError, ValueError) as error:
            raise Parse__Error(f"scalar json must be [v, unit, prec], got {data!r}") from error
        if v == '+inf':
            return cls(ctx, INFINITY, 0, INFINITY if prec == '+inf' else int(prec))
        return cls(ctx, int(v), int(unit) % p_power(ctx.prime, int(prec)), int(prec))

    # ═══════════════════════════════════════════════════════════════════════════════
    # Predicates and accessors
    # ═══════════════════════════════════════════════════════════════════════════════

    def check_context(self, ctx):
        if self.ctx is not ctx and self.ctx != ctx:
            raise Context__Mismatch(f"scalar in context {self.ctx} used with {ctx}")

    def is_zero(self) -> bool:
        return self.v is INFINITY

    def is_exact_zero(self) -> bool:
        return self.v is INFINITY and self.prec is INFINITY

    @property
    def absolute_precision(self):
        if self.v is INFINITY:
            return self.prec
        return self.v + self.prec

    def val(self):                                                               # padic_val
        if self.v is INFINITY:
            return INFINITY
        return Fraction(self.v)

    def residue(self) -> int:                                                    # first p-adic digit of an integral scalar
        if self.v is INFINITY or self.v > 0:
            return 0
        if self.v < 0:
            raise Out_Of_Chart(f"residue of a non-integral scalar {self}")
        return self.unit % self.ctx.prime

    def resolves(self, level) -> bool:                                           # is c mod p^ceil(level) determined at this precision
        if isinstance(level, Val__Infinity):
            return self.is_exact_zero()
        digits = ceil(level)
        if self.v is INFINITY:
            return self.prec >= digits
        return self.v >= digits or self.v + self.prec >= digits

    def digits_below(self, level) -> Fraction:                                   # canonical c mod p^ceil(level), clamped to known digits
        if self.v is INFINITY:
            return Fraction(0)
        digits = ceil(level)
        if self.v >= digits:
            return Fraction(0)
        keep = min(digits - self.v, self.prec)
        kept = self.unit % p_power(self.ctx.prime, keep)
        return Fraction(kept) * Fraction(self.ctx.prime) ** self.v

    def to_fraction(self) -> Fraction:                                           # symmetric representative u * p^v
        if self.v is INFINITY:
            return Fraction(0)
        modulus = p_power(self.ctx.prime, self.prec)
        unit    = self.unit if self.unit <= modulus // 2 else self.unit - modulus
        return Fraction(unit) * Fraction(self.ctx.prime) ** self.v

    # ═══════════════════════════════════════════════════════════════════════════════
    # Arithmetic
    # ═══════════════════════════════════════════════════════════════════════════════

    def _coerce(self, other):
        if isinstance(other, Padic__Scalar):
            other.check_context(self.ctx)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ctx.from_rational(Fraction(other))
        return None

    def add(self, other):                                                        # padic_add
        other = self._coerce(other)
        return Padic__Scalar.sum_of(self.ctx, (self, other))

    def neg(self):
        if self.v is INFINITY:
            return self
        modulus = p_power(self.ctx.prime, self.prec)
        return Padic__Scalar(self.ctx, self.v, (-self.unit) % modulus, self.prec)

    def sub(self, other):
        other = self._coerce(other)
        return Padic__Scalar.sum_of(self.ctx, (self, other.neg()))

    def mul(self, other):                                                        # padic_mul
        other = self._coerce(other)
        if self.v is INFINITY or other.v is INFINITY:
            if self.is_exact_zero() or other.is_exact_zero():
                return Padic__Scalar.exact_zero(self.ctx)
            if self.v is INFINITY and other.v is INFINITY:
                return Padic__Scalar.inexact_zero(self.ctx, self.prec + other.prec)
            zero, factor = (self, other) if self.v is INFINITY else (other, self)
            return Padic__Scalar.inexact_zero(self.ctx, zero.prec + factor.v)
        prec = self.prec if self.prec < other.prec else other.prec
        unit = (self.unit * other.unit) % p_power(self.ctx.prime, prec)
        return Padic__Scalar(self.ctx, self.v + other.v, unit, prec)

    def inv(self):                                                               # padic_inv
        if self.v is INFINITY:
            raise Padic__Division_By_Zero(f"inversion of zero ({self})")
        modulus = p_power(self.ctx.prime, self.prec)
        return Padic__Scalar(self.ctx, -self.v, pow(self.unit, -1, modulus), self.prec)

    def div(self, other):
        other = self._coerce(other)
        return self.mul(other.inv())

    def pow(self, exponent: int):
        if exponent == 0:
            return self.ctx.one()
        if exponent < 0:
            return self.inv().pow(-exponent)
        if self.v is INFINITY:
            result = self
            for _ in range(exponent - 1):
                result = result.mul(self)
            return result
        modulus = p_power(self.ctx.prime, self.prec)
        return Padic__Scalar(self.ctx, self.v * exponent, pow(self.unit, exponent, modulus), self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self.add(other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other.add(self)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self.sub(other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other.sub(self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self.mul(other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other.mul(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self.div(other)

    def __neg__(self):
        return self.neg()

    def __pow__(self, exponent):
        return self.pow(exponent)

    def __eq__(self, other):                                                     # equality at the common known precision
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.sub(other).is_zero()

    __hash__ = None

    # ═══════════════════════════════════════════════════════════════════════════════
    # Rendering
    # ═══════════════════════════════════════════════════════════════════════════════

    def json(self):
        if self.v is INFINITY:
            return ['+inf', 0, str(self.prec) if self.prec is INFINITY else self.prec]
        return [self.v, self.unit, self.prec]

    def __str__(self):
        prime = self.ctx.prime
        if self.v is INFINITY:
            return '0' if self.prec is INFINITY else f"O({prime}^{self.prec})"
        return f"{self.unit} * {prime}^{self.v} + O({prime}^{self.v + self.prec})"

    def __repr__(self):
        return f"Padic__Scalar({self})"
