# ═══════════════════════════════════════════════════════════════════════════════
# Disc__Point - base of the point types of the adic disc / G_m
#
# Equality is semantic and decided at working precision: compare() answers
# 'equal', 'distinct' or 'indistinguishable' (the distinguishing digits are
# below the known precision); == is True only for 'equal'
# ═══════════════════════════════════════════════════════════════════════════════

from math                                               import ceil
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY

COMPARE__EQUAL             = 'equal'
COMPARE__DISTINCT          = 'distinct'
COMPARE__INDISTINGUISHABLE = 'indistinguishable'


class Disc__Point:
    point_type = 0

    def compare(self, other) -> str:
        raise NotImplementedError()

    def max_generalization(self) -> 'Disc__Point':
        return self

    def avatar_radius(self):                                                     # radius of the rank-1 avatar, +inf for classical points
        return INFINITY

    def center_val(self):
        return self.c.val()

    def chart_position(self):                                                    # v(T) at the point
        center_val = self.c.val()
        radius     = self.avatar_radius()
        return center_val if center_val < radius else radius

    def __eq__(self, other):
        if not isinstance(other, Disc__Point):
            return NotImplemented
        return self.compare(other) == COMPARE__EQUAL

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    @staticmethod
    def agreement(difference, level) -> str:                                     # is v(difference) >= level, at precision
        if level is INFINITY:
            if difference.is_zero():
                return COMPARE__EQUAL
            return COMPARE__DISTINCT
        digits = ceil(level)
        if not difference.is_zero():
            return COMPARE__EQUAL if difference.v >= digits else COMPARE__DISTINCT
        if difference.is_exact_zero() or difference.prec >= digits:
            return COMPARE__EQUAL
        return COMPARE__INDISTINGUISHABLE

    def __repr__(self):
        return f"{type(self).__name__}({self})"
