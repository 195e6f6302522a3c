# ═══════════════════════════════════════════════════════════════════════════════
# Rational__Val - the additive value group Q ∪ {±∞}
# Valuations and radius exponents are exact Fractions; infinity is a sentinel that
# orders above (or below) every rational and absorbs addition
# ═══════════════════════════════════════════════════════════════════════════════

from fractions                                          import Fraction
from typing                                             import Union
from adic_spaces_toolkit.utils.Toolkit__Errors          import Parse__Error


class Val__Infinity:
    __slots__ = ('sign',)

    def __init__(self, sign: int):
        self.sign = 1 if sign > 0 else -1

    def _key(self, other):
        if isinstance(other, Val__Infinity):
            return other.sign
        if isinstance(other, (int, Fraction)):
            return 0
        return None

    def __eq__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign == key

    def __lt__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign < key

    def __le__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign <= key

    def __gt__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign > key

    def __ge__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign >= key

    def __hash__(self):
        return hash(('Val__Infinity', self.sign))

    def __add__(self, other):
        if isinstance(other, Val__Infinity) and other.sign != self.sign:
            raise ValueError("∞ - ∞ is undefined")
        if isinstance(other, (int, Fraction, Val__Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Val__Infinity)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return -self
        return NotImplemented

    def __neg__(self):
        return INFINITY if self.sign < 0 else NEG_INFINITY

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ValueError("0 * ∞ is undefined")
            return self if other > 0 else -self
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return '+inf' if self.sign > 0 else '-inf'

    __str__ = __repr__


INFINITY     = Val__Infinity(+1)
NEG_INFINITY = Val__Infinity(-1)

Rational_Val = Union[Fraction, Val__Infinity]


def is_infinite(value) -> bool:
    return isinstance(value, Val__Infinity)

def is_finite(value) -> bool:
    return not isinstance(value, Val__Infinity)

def rational_val(value) -> Rational_Val:                                         # parse int / Fraction / str ("1/2", "1.5", "+inf")
    if isinstance(value, Val__Infinity):
        return value
    if isinstance(value, bool):
        raise Parse__Error(f"not a rational value: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ('inf', '+inf', '∞', '+∞', 'infinity', '+infinity'):
            return INFINITY
        if text in ('-inf', '-∞', '-infinity'):
            return NEG_INFINITY
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as error:
            raise Parse__Error(f"not a rational value: {value!r}") from error
    raise Parse__Error(f"not a rational value: {value!r}")

def val_to_json(value) -> str:
    if isinstance(value, Val__Infinity):
        return str(value)
    return str(Fraction(value))

def val_min(values, default=INFINITY) -> Rational_Val:
    result = default
    for value in values:
        if value < result:
            result = value
    return result

def val_to_compact_json(value):                                                  # integral values as JSON numbers, the rest as strings
    if isinstance(value, Val__Infinity):
        return str(value)
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)
