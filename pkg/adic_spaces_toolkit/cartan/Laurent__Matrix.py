# ═══════════════════════════════════════════════════════════════════════════════
# Laurent__Matrix - n x n matrix of Laurent__Series sharing one chart and window
# ═══════════════════════════════════════════════════════════════════════════════

from math                                               import ceil
from adic_spaces_toolkit.config                         import CARTAN__NEUMANN_EXTRA_TERMS
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, val_min
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Invalid__Spec, Non_Convergence, Not_Near_Identity


class Laurent__Matrix:
    __slots__ = ('ctx', 'chart', 'window', 'n', 'entries')

    def __init__(self, ctx, chart, window: int, entries):
        rows = tuple(tuple(row) for row in entries)
        n    = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise Invalid__Spec("a Laurent matrix must be square and non-empty")
        for row in rows:
            for entry in row:
                if entry.chart != chart or entry.window != window:
                    raise Chart__Mismatch(f"matrix entry on {entry.chart}/window {entry.window}, expected {chart}/window {window}")
        self.ctx     = ctx
        self.chart   = chart
        self.window  = window
        self.n       = n
        self.entries = rows

    @classmethod
    def identity(cls, ctx, chart, window, n):
        return cls(ctx, chart, window, [[Laurent__Series.one(ctx, chart, window) if i == j else Laurent__Series.zero(ctx, chart, window)
                                         for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ctx, chart, window, n):
        return cls(ctx, chart, window, [[Laurent__Series.zero(ctx, chart, window) for _ in range(n)] for _ in range(n)])

    def _map(self, function) -> 'Laurent__Matrix':
        return Laurent__Matrix(self.ctx, self.chart, self.window, [[function(entry) for entry in row] for row in self.entries])

    def entry(self, i: int, j: int) -> Laurent__Series:
        return self.entries[i][j]

    @property
    def truncated(self) -> bool:
        return any(entry.truncated for row in self.entries for entry in row)

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Arithmetic
    # ═══════════════════════════════════════════════════════════════════════════════

    def check_compatible(self, other: 'Laurent__Matrix'):
        if self.n != other.n:
            raise Invalid__Spec(f"matrix sizes differ: {self.n} vs {other.n}")
        if self.chart != other.chart or self.window != other.window:
            raise Chart__Mismatch(f"matrices on {self.chart}/window {self.window} and {other.chart}/window {other.window}")

    def add(self, other: 'Laurent__Matrix') -> 'Laurent__Matrix':
        self.check_compatible(other)
        return Laurent__Matrix(self.ctx, self.chart, self.window,
                               [[self.entries[i][j].add(other.entries[i][j]) for j in range(self.n)] for i in range(self.n)])

    def neg(self) -> 'Laurent__Matrix':
        return self._map(Laurent__Series.neg)

    def sub(self, other: 'Laurent__Matrix') -> 'Laurent__Matrix':
        return self.add(other.neg())

    def mul(self, other: 'Laurent__Matrix', val_cap=None) -> 'Laurent__Matrix':
        self.check_compatible(other)
        n    = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                total = Laurent__Series.zero(self.ctx, self.chart, self.window)
                for k in range(n):
                    left, right = self.entries[i][k], other.entries[k][j]
                    if left.is_zero() or right.is_zero():
                        continue
                    total = total.add(left.mul(right, val_cap=val_cap))
                row.append(total)
            rows.append(row)
        return Laurent__Matrix(self.ctx, self.chart, self.window, rows)

    def identity_like(self) -> 'Laurent__Matrix':
        return Laurent__Matrix.identity(self.ctx, self.chart, self.window, self.n)

    def minus_identity(self) -> 'Laurent__Matrix':
        return self.sub(self.identity_like())

    def prune(self, cap) -> 'Laurent__Matrix':
        return self._map(lambda entry: entry.prune(cap))

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __mul__(self, other):
        return self.mul(other)

    def __neg__(self):
        return self.neg()

    # ═══════════════════════════════════════════════════════════════════════════════
    # Norms, splitting, inversion
    # ═══════════════════════════════════════════════════════════════════════════════

    def sup_val(self):                                                           # matrix_sup_val: max norm as a valuation
        return val_min(entry.sup_val() for row in self.entries for entry in row)

    def exponents(self) -> list:                                                 # union of the entry supports
        return sorted({exponent for row in self.entries for entry in row for exponent in entry.coeffs})

    def split(self) -> tuple:                                                    # V = C - D, C on exponents >= 0, D on exponents <= 0
        if not self.chart.is_circle():
            raise Chart__Mismatch(f"splitting needs a circle chart, got {self.chart}")
        plus_rows, minus_rows = [], []
        for row in self.entries:
            plus_row, minus_row = [], []
            for entry in row:
                f_plus, f_minus = entry.split_laurent()
                plus_row .append(f_plus .restrict(self.chart))
                minus_row.append(f_minus.restrict(self.chart))
            plus_rows .append(plus_row )
            minus_rows.append(minus_row)
        return (Laurent__Matrix(self.ctx, self.chart, self.window, plus_rows ),
                Laurent__Matrix(self.ctx, self.chart, self.window, minus_rows))

    def inverse_near_identity(self, cap) -> 'Laurent__Matrix':
        """(I - X)⁻¹ = Σ X^k, truncated once X^k is O(p^cap) on the chart."""
        x     = self.identity_like().sub(self)
        x_val = x.sup_val()
        if x_val is INFINITY:
            return self.identity_like()
        if x_val <= 0:
            raise Not_Near_Identity(f"Neumann inversion needs val(M - I) > 0, got {x_val}")
        max_terms = ceil(cap / x_val) + CARTAN__NEUMANN_EXTRA_TERMS
        result    = self.identity_like()
        power     = self.identity_like()
        for _ in range(max_terms):
            power = power.mul(x, val_cap=cap)
            if power.is_zero():
                return result
            result = result.add(power)
        raise Non_Convergence(f"Neumann series did not reach O(p^{cap}) in {max_terms} terms", [power.sup_val()])

    def determinant(self, val_cap=None) -> Laurent__Series:                     # Laplace expansion along the first row
        return self._determinant(list(range(self.n)), list(range(self.n)), val_cap)

    def _determinant(self, rows, cols, val_cap):
        if len(rows) == 1:
            return self.entries[rows[0]][cols[0]]
        total = Laurent__Series.zero(self.ctx, self.chart, self.window)
        first = rows[0]
        for index, col in enumerate(cols):
            entry = self.entries[first][col]
            if entry.is_zero():
                continue
            minor = self._determinant(rows[1:], cols[:index] + cols[index + 1:], val_cap)
            term  = entry.mul(minor, val_cap=val_cap)
            total = total.add(term) if index % 2 == 0 else total.sub(term)
        return total

    # ═══════════════════════════════════════════════════════════════════════════════
    # Chart and window
    # ═══════════════════════════════════════════════════════════════════════════════

    def with_chart(self, chart) -> 'Laurent__Matrix':
        return Laurent__Matrix(self.ctx, chart, self.window, [[entry.with_chart(chart) for entry in row] for row in self.entries])

    def with_window(self, window: int) -> 'Laurent__Matrix':
        return Laurent__Matrix(self.ctx, self.chart, window, [[entry.with_window(window) for entry in row] for row in self.entries])

    def restrict(self, chart) -> 'Laurent__Matrix':
        return Laurent__Matrix(self.ctx, chart, self.window, [[entry.restrict(chart) for entry in row] for row in self.entries])

    # ═══════════════════════════════════════════════════════════════════════════════
    # Rendering
    # ═══════════════════════════════════════════════════════════════════════════════

    def json(self):                                                              # sparse entry list
        entries = []
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                if not entry.is_zero():
                    entries.append([i, j, entry.json()['coeffs']])
        return dict(n=self.n, chart=self.chart.json(), window=self.window, entries=entries)

    def __str__(self):
        return '\n'.join(' | '.join(entry.terms_text() for entry in row) for row in self.entries)
