# ═══════════════════════════════════════════════════════════════════════════════
# Matrix__Parser - sparse text -> Laurent__Matrix
#
#   # comment
#   n=2
#   chart=[0,0]              (optional, defaults to the circle v(T) = 0)
#   0 0 0:1
#   0 1 -1:5
#   1 0 1:5
#   1 1 0:1
#
# Each entry line is "row col <series>", the series in either grammar accepted
# by Series__Parser; entries not listed are zero
# ═══════════════════════════════════════════════════════════════════════════════

from adic_spaces_toolkit.cartan.Laurent__Matrix         import Laurent__Matrix
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.series.Series__Parser          import Series__Parser
from adic_spaces_toolkit.utils.Toolkit__Errors          import Parse__Error


class Matrix__Parser:

    def __init__(self, ctx, window: int):
        self.ctx    = ctx
        self.window = window

    def parse(self, text: str) -> Laurent__Matrix:
        size    = None
        chart   = Chart.circle(0)
        lines   = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if line.startswith('n='):
                size = self.parse_int(line[2:], number)
            elif line.startswith('chart='):
                chart = Chart.parse(line[len('chart='):])
            else:
                lines.append((number, line))
        if size is None or size < 1:
            raise Parse__Error("matrix text needs a line 'n=<size>' with size >= 1")
        parser  = Series__Parser(self.ctx, chart, self.window)
        entries = [[Laurent__Series.zero(self.ctx, chart, self.window) for _ in range(size)] for _ in range(size)]
        for number, line in lines:
            parts = line.split(None, 2)
            if len(parts) != 3:
                raise Parse__Error(f"line {number}: expected 'row col series', got {line!r}")
            row, col = self.parse_int(parts[0], number), self.parse_int(parts[1], number)
            if not (0 <= row < size and 0 <= col < size):
                raise Parse__Error(f"line {number}: entry ({row}, {col}) outside a {size}x{size} matrix")
            entries[row][col] = entries[row][col].add(parser.parse(parts[2]))
        return Laurent__Matrix(self.ctx, chart, self.window, entries)

    def parse_int(self, text: str, number=None) -> int:
        try:
            return int(text.strip())
        except ValueError as error:
            where = f"line {number}: " if number else ''
            raise Parse__Error(f"{where}not an integer: {text!r}") from error
