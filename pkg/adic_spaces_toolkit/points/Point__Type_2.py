from fractions                                          import Fraction
from adic_spaces_toolkit.padic.Rational__Val            import rational_val, is_infinite, val_to_json
from adic_spaces_toolkit.points.Disc__Point             import Disc__Point, COMPARE__DISTINCT
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec


class Point__Type_2(Disc__Point):                                                # η(c, r): the Gauss point of the closed disc v(T - c) >= r
    __slots__  = ('c', 'r')
    point_type = 2

    def __init__(self, c, r):
        r = rational_val(r)
        if is_infinite(r):
            raise Invalid__Spec("a type 2 point needs a finite radius exponent")
        self.c = c
        self.r = r

    def avatar_radius(self):
        return self.r

    def compare(self, other) -> str:
        if type(other) is not Point__Type_2 or other.r != self.r:
            return COMPARE__DISTINCT
        return self.agreement(self.c.sub(other.c), self.r)

    def key(self) -> tuple:                                                      # canonical (c mod p^ceil(r), r)
        return self.c.digits_below(self.r), self.r

    def __hash__(self):
        return hash(('eta',) + self.key())

    def json(self):
        return dict(type=2, c=self.c.json(), r=val_to_json(self.r))

    def __str__(self):
        return f"η({self.c.to_fraction()}, {Fraction(self.r)})"
