# ═══════════════════════════════════════════════════════════════════════════════
# Cech__Cohomology - dim H⁰ / dim H¹ of a two-term Čech complex, grade by grade
#
# Per grade g:  dim H⁰_g = #cols - rank,  dim H¹_g = #rows - rank,  where the rank
# counts elementary divisors below the zero threshold. Grades are independent,
# so they may be evaluated on a thread pool; results are reassembled in grade
# order, so the report does not depend on the schedule
# ═══════════════════════════════════════════════════════════════════════════════

import logging
from concurrent.futures                                 import ThreadPoolExecutor
from random                                             import Random
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.cech.Cech__Builder             import Cech__Builder
from adic_spaces_toolkit.cech.Cech__Complex             import Cech__Complex
from adic_spaces_toolkit.cech.Cech__Space__Spec         import Cech__Space__Spec
from adic_spaces_toolkit.cech.Cohomology__Report        import Cohomology__Report
from adic_spaces_toolkit.cech.Elementary__Divisors      import Elementary__Divisors
from adic_spaces_toolkit.config                         import DEFAULT__WINDOW, DEFAULT__THRESHOLD, THRESHOLD__GUARD_DIGITS
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Rational__Val            import val_to_json
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec

logger = logging.getLogger(__name__)

TRUNCATION_FLAG__TRUNCATED_DIMENSION = 'truncated_dimension'


class Cech__Cohomology(Type_Safe):
    ctx         : Padic__Context = None
    window      : int            = DEFAULT__WINDOW
    threshold   : int            = DEFAULT__THRESHOLD                            # < 0 means precision - guard digits
    max_workers : int            = 1

    def resolve_threshold(self) -> int:
        precision = self.ctx.precision
        threshold = self.threshold if self.threshold >= 0 else max(1, precision - THRESHOLD__GUARD_DIGITS)
        if threshold > precision:
            raise Invalid__Spec(f"zero threshold {threshold} exceeds the working precision {precision}")
        return threshold

    def builder(self) -> Cech__Builder:
        return Cech__Builder(ctx=self.ctx, window=self.window)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Graded path
    # ═══════════════════════════════════════════════════════════════════════════════

    def cohomology_of_spec(self, spec: Cech__Space__Spec) -> Cohomology__Report:
        return self.cohomology(self.builder().build(spec))

    def cohomology(self, complex_: Cech__Complex) -> Cohomology__Report:
        threshold = self.resolve_threshold()
        divisors  = Elementary__Divisors(threshold=threshold)
        if self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                grades = list(executor.map(lambda block: self.grade_entry(divisors, block), complex_.blocks))
        else:
            grades = [self.grade_entry(divisors, block) for block in complex_.blocks]
        h0 = sum(entry['h0'] for entry in grades)
        h1 = sum(entry['h1'] for entry in grades)
        logger.debug("cohomology of %s at D=%d: dims=(%d, %d)", complex_.spec.kind.value, complex_.window, h0, h1)
        flags = [TRUNCATION_FLAG__TRUNCATED_DIMENSION] if complex_.spec.is_bigraded() else []
        return Cohomology__Report(spec             = complex_.spec.json()     ,
                                  window           = complex_.window          ,
                                  prime            = self.ctx.prime           ,
                                  precision        = self.ctx.precision       ,
                                  threshold        = threshold                ,
                                  dims             = [h0, h1]                 ,
                                  grades           = grades                   ,
                                  truncation_flags = flags                    )

    def grade_entry(self, divisors: Elementary__Divisors, block) -> dict:
        values = divisors.compute(block.matrix)
        rank   = len(values)
        entry  = dict(g        = block.grade_json()                      ,
                      divisors = [val_to_json(value) for value in values],
                      h0       = len(block.cols) - rank                  ,
                      h1       = len(block.rows) - rank                  )
        logger.debug("grade %s: rank=%d divisors=%s", block.grade, rank, entry['divisors'])
        return entry

    # ═══════════════════════════════════════════════════════════════════════════════
    # Non-graded path (user supplied two-term complexes)
    # ═══════════════════════════════════════════════════════════════════════════════

    def cohomology_of_matrix(self, matrix) -> dict:
        threshold = self.resolve_threshold()
        rows      = [[self.ctx.scalar(entry) for entry in row] for row in matrix]
        n_rows    = len(rows)
        n_cols    = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise Invalid__Spec("matrix rows have different lengths")
        values    = Elementary__Divisors(threshold=threshold).compute(rows)
        rank      = len(values)
        return dict(dims      = [n_cols - rank, n_rows - rank]             ,
                    divisors  = [val_to_json(value) for value in values]   ,
                    rank      = rank                                       ,
                    threshold = threshold                                  )

    # ═══════════════════════════════════════════════════════════════════════════════
    # Sweeps
    # ═══════════════════════════════════════════════════════════════════════════════

    def acyclicity_sweep(self, specs) -> list:
        reports = []
        for index, spec in enumerate(specs):
            report = self.cohomology_of_spec(spec)
            logger.debug("sweep %d: %s -> dims=%s", index, spec.json(), report.dims)
            reports.append(report)
        return reports

    @staticmethod
    def random_annulus_specs(count: int, seed: int = 0, bound: int = 6) -> list:  # integral a < s0 < b in [-bound, bound]
        random = Random(seed)
        specs  = []
        for _ in range(count):
            a  = random.randint(-bound, bound - 2)
            s0 = random.randint(a + 1, bound - 1)
            b  = random.randint(s0 + 1, bound)
            specs.append(Cech__Space__Spec.annulus(a, s0, b))
        return specs

    @staticmethod
    def sweep_table(reports) -> list:
        return [dict(spec=report.spec, dims=list(report.dims)) for report in reports]
