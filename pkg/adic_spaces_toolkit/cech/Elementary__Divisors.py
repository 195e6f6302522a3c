# ═══════════════════════════════════════════════════════════════════════════════
# Elementary__Divisors - valuation-pivoted elimination over Z_p (local Smith form)
#
# Full pivoting on a minimal-valuation entry keeps every multiplier integral, so
# the pivot valuations are the elementary divisors. An entry whose valuation is
# >= threshold counts as zero; a pivot that an inexact zero could be hiding is
# reported as Precision__Exhausted instead of being guessed
# ═══════════════════════════════════════════════════════════════════════════════

from fractions                                          import Fraction
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY
from adic_spaces_toolkit.utils.Toolkit__Errors          import Precision__Exhausted


class Elementary__Divisors(Type_Safe):
    threshold : int

    def compute(self, matrix) -> list:                                           # sorted pivot valuations, one per rank
        rows      = [list(row) for row in matrix]
        if not rows or not rows[0]:
            return []
        live_rows = list(range(len(rows)))
        live_cols = list(range(len(rows[0])))
        divisors  = []
        while live_rows and live_cols:
            pivot_row, pivot_col, pivot_v = self.find_pivot(rows, live_rows, live_cols)
            blind_spot = self.lowest_unknown(rows, live_rows, live_cols)
            level      = self.threshold if pivot_v is None or pivot_v >= self.threshold else pivot_v
            if blind_spot < level:
                raise Precision__Exhausted(f"an entry known only to O(p^{blind_spot}) hides the pivot "
                                           f"(needs {level} digits, threshold {self.threshold})")
            if pivot_v is None or pivot_v >= self.threshold:
                break
            divisors.append(Fraction(pivot_v))
            self.eliminate(rows, live_rows, live_cols, pivot_row, pivot_col)
            live_rows.remove(pivot_row)
            live_cols.remove(pivot_col)
        return sorted(divisors)

    def rank(self, matrix) -> int:
        return len(self.compute(matrix))

    def find_pivot(self, rows, live_rows, live_cols):
        best = (None, None, None)
        for r in live_rows:
            row = rows[r]
            for c in live_cols:
                entry = row[c]
                if entry.v is INFINITY:
                    continue
                if best[2] is None or entry.v < best[2]:
                    best = (r, c, entry.v)
        return best

    def lowest_unknown(self, rows, live_rows, live_cols):                        # smallest absolute precision among inexact zeros
        lowest = INFINITY
        for r in live_rows:
            row = rows[r]
            for c in live_cols:
                entry = row[c]
                if entry.v is INFINITY and entry.prec < lowest:
                    lowest = entry.prec
        return lowest

    def eliminate(self, rows, live_rows, live_cols, pivot_row, pivot_col):
        pivot     = rows[pivot_row][pivot_col]
        pivot_inv = pivot.inv()
        for r in live_rows:
            if r == pivot_row:
                continue
            entry = rows[r][pivot_col]
            if entry.is_exact_zero():
                continue
            factor = entry.mul(pivot_inv)
            for c in live_cols:
                if c == pivot_col:
                    rows[r][c] = Padic__Scalar.exact_zero(pivot.ctx)
                    continue
                source = rows[pivot_row][c]
                if source.is_exact_zero():
                    continue
                rows[r][c] = rows[r][c].sub(factor.mul(source))
