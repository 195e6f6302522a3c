from adic_spaces_toolkit.points.Disc__Point             import Disc__Point, COMPARE__DISTINCT

HASH__LEVEL = 1                                                                  # equal points whose centres are known mod p^HASH__LEVEL share a hash


class Point__Type_1(Disc__Point):                                                # x(c): the classical point T = c
    __slots__  = ('c',)
    point_type = 1

    def __init__(self, c):
        self.c = c

    def compare(self, other) -> str:
        if not isinstance(other, Point__Type_1):
            return COMPARE__DISTINCT
        return self.agreement(self.c.sub(other.c), self.avatar_radius())

    def __hash__(self):
        return hash(('x', self.c.digits_below(HASH__LEVEL)))

    def json(self):
        return dict(type=1, c=self.c.json())

    def __str__(self):
        return f"x({self.c.to_fraction()})"
