from fractions                                          import Fraction
from sympy                                              import isprime
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar, p_power, p_valuation_int
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec, Parse__Error
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Padic__Context(Type_Safe__Value):                                          # the (p, N) every scalar of one computation shares
    prime     : int = 0
    precision : int = 0

    def __init__(self, prime: int = 0, precision: int = 0):
        if not isprime(prime):
            raise Invalid__Spec(f"p must be prime, got {prime}")
        if precision < 1:
            raise Invalid__Spec(f"precision must be >= 1, got {precision}")
        super().__init__(prime=int(prime), precision=int(precision))

    def __str__(self):
        return f"Padic__Context(p={self.prime}, N={self.precision})"

    @property
    def modulus(self) -> int:
        return p_power(self.prime, self.precision)

    def power(self, exponent: int) -> int:
        return p_power(self.prime, exponent)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Scalar construction
    # ═══════════════════════════════════════════════════════════════════════════════

    def zero(self) -> Padic__Scalar:
        return Padic__Scalar.exact_zero(self)

    def one(self) -> Padic__Scalar:
        return self.from_int(1)

    def from_int(self, value: int) -> Padic__Scalar:
        return self.from_rational(Fraction(value))

    def from_rational(self, value: Fraction) -> Padic__Scalar:
        value = Fraction(value)
        if value == 0:
            return Padic__Scalar.exact_zero(self)
        prime         = self.prime
        numerator     = value.numerator
        denominator   = value.denominator
        v_numerator   = p_valuation_int(numerator  , prime)
        v_denominator = p_valuation_int(denominator, prime)
        modulus       = self.modulus
        unit_num      = numerator   // p_power(prime, v_numerator  )
        unit_den      = denominator // p_power(prime, v_denominator)
        unit          = (unit_num * pow(unit_den, -1, modulus)) % modulus
        return Padic__Scalar(self, v_numerator - v_denominator, unit, self.precision)

    def p_to(self, exponent: int) -> Padic__Scalar:                              # the scalar p^k
        return Padic__Scalar(self, exponent, 1, self.precision)

    def scalar(self, value) -> Padic__Scalar:                                    # int / Fraction / str / Padic__Scalar
        if isinstance(value, Padic__Scalar):
            value.check_context(self)
            return value
        if isinstance(value, bool):
            raise Parse__Error(f"cannot build a scalar from {value!r}")
        if isinstance(value, (int, Fraction)):
            return self.from_rational(Fraction(value))
        if isinstance(value, str):
            try:
                return self.from_rational(Fraction(value.strip()))
            except (ValueError, ZeroDivisionError) as error:
                raise Parse__Error(f"cannot parse scalar {value!r}") from error
        raise Parse__Error(f"cannot build a scalar from {type(value).__name__}")
