from fractions                                          import Fraction
from math                                               import floor
from adic_spaces_toolkit.padic.Rational__Val            import val_to_json
from adic_spaces_toolkit.points.Disc__Point             import Disc__Point, COMPARE__DISTINCT, COMPARE__EQUAL
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2


class Point__Type_5(Disc__Point):
    """η(c, r)±: the rank-2 point with v(T - c) = r ± ε.

    Side plus points into the residue direction of c at η(c, r), so two plus
    points agree only if their centers also agree beyond r; side minus is the
    single outward direction of η(c, r).
    """
    __slots__  = ('c', 'r', 'side')
    point_type = 5

    def __init__(self, c, r, side):
        partner   = Point__Type_2(c, r)
        self.c    = c
        self.r    = partner.r
        self.side = Point__Side(side)

    def partner(self) -> Point__Type_2:
        return Point__Type_2(self.c, self.r)

    def max_generalization(self) -> Point__Type_2:
        return self.partner()

    def avatar_radius(self):
        return self.r

    def direction_level(self):                                                  # v(c - c') must reach this for equal directions
        return floor(self.r) + 1 if self.side is Point__Side.PLUS else self.r

    def compare(self, other) -> str:
        if type(other) is not Point__Type_5 or other.side is not self.side:
            return COMPARE__DISTINCT
        partners = self.partner().compare(other.partner())
        if partners != COMPARE__EQUAL:
            return partners
        return self.agreement(self.c.sub(other.c), self.direction_level())

    def key(self) -> tuple:
        return self.c.digits_below(self.direction_level()), self.r, self.side.value

    def __hash__(self):
        return hash(('eta5',) + self.key())

    def json(self):
        return dict(type=5, c=self.c.json(), r=val_to_json(self.r), side=self.side.value)

    def __str__(self):
        return f"η({self.c.to_fraction()}, {Fraction(self.r)}){self.side.value}"
