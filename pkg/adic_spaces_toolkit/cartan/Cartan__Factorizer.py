# ═══════════════════════════════════════════════════════════════════════════════
# Cartan__Factorizer - B = B1*·B2* for B near the identity on a circle v(T) = s
#
#   V_1     = B - I
#   V_n     = C_n - D_n                        C_n on exponents >= 0, D_n on <= 0
#   I + V_{n+1} = (I - C_n)(I + V_n)(I + D_n)
#   V_{n+1} = V_n D_n - C_n V_n - C_n D_n - C_n V_n D_n
#
# The accumulated left factors are power series in T and the right factors are
# power series in T⁻¹; since V_{n+1} is quadratic in V_n the valuations double
# ═══════════════════════════════════════════════════════════════════════════════

import logging
from math                                               import ceil
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.cartan.Factorization__Result   import Factorization__Result
from adic_spaces_toolkit.cartan.Laurent__Matrix         import Laurent__Matrix
from adic_spaces_toolkit.config                         import CARTAN__WINDOW_FACTOR, CARTAN__EXTRA_ITERATIONS, THRESHOLD__GUARD_DIGITS
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, rational_val
from adic_spaces_toolkit.series.Chart                   import Chart
from adic_spaces_toolkit.utils.Toolkit__Errors          import Chart__Mismatch, Non_Convergence, Not_Near_Identity, Precision__Exhausted, Support__Violation

logger = logging.getLogger(__name__)


class Cartan__Factorizer(Type_Safe):
    ctx           : Padic__Context = None
    target        : int            = -1                                          # < 0 means precision - guard digits
    max_iter      : int            = 0                                           # 0 means ceil(target / val(V_1)) + extra
    window_factor : int            = CARTAN__WINDOW_FACTOR

    def resolve_target(self, target=None):
        if target is None:
            target = self.target if self.target >= 0 else self.ctx.precision - THRESHOLD__GUARD_DIGITS
        target = rational_val(target)
        if target > self.ctx.precision:
            raise Precision__Exhausted(f"target {target} is beyond the working precision {self.ctx.precision}")
        return target

    def resolve_max_iter(self, target, initial_val, max_iter=None):
        if max_iter is None:
            max_iter = self.max_iter
        if max_iter and max_iter > 0:
            return max_iter
        return ceil(target / initial_val) + CARTAN__EXTRA_ITERATIONS

    # ═══════════════════════════════════════════════════════════════════════════════
    # Public operations
    # ═══════════════════════════════════════════════════════════════════════════════

    def factor(self, B: Laurent__Matrix, target=None, max_iter=None) -> Factorization__Result:      # cartan_factor
        result, _, _ = self.run(B, target, max_iter)
        return result

    def trivialize(self, B: Laurent__Matrix, target=None, max_iter=None) -> tuple:                # trivialize_glued_free_module
        """Y over the disc in T and Z over the disc in T⁻¹ with Y = B·Z on the circle.

        Y = B1* and Z = (B2*)⁻¹, which is the accumulated right factor of the recursion.
        """
        result, _, right = self.run(B, target, max_iter)
        Z = right.with_chart(Chart.disc_at_infinity(B.chart.b))
        return result.B1, Z, result

    def residual_val(self, B: Laurent__Matrix, B1: Laurent__Matrix, B2: Laurent__Matrix):        # val(B1*·B2* - B), by direct multiplication
        circle = B.chart
        window = max(B.window, B1.window, B2.window)
        left   = B1.restrict(circle).with_window(window) if B1.chart != circle else B1.with_window(window)
        right  = B2.restrict(circle).with_window(window) if B2.chart != circle else B2.with_window(window)
        return left.mul(right, val_cap=self.ctx.precision).sub(B.with_window(window)).prune(self.ctx.precision).sup_val()

    def check_split(self, C: Laurent__Matrix, D: Laurent__Matrix):              # C on exponents >= 0, D on exponents <= 0
        negative = [exponent for exponent in C.exponents() if exponent < 0]
        positive = [exponent for exponent in D.exponents() if exponent > 0]
        if negative or positive:
            raise Support__Violation(f"splitting left exponents {negative} in C and {positive} in D")

    # ═══════════════════════════════════════════════════════════════════════════════
    # Recursion
    # ═══════════════════════════════════════════════════════════════════════════════

    def run(self, B: Laurent__Matrix, target=None, max_iter=None):
        chart = B.chart
        if not chart.is_circle():
            raise Chart__Mismatch(f"the factorization runs on a circle chart, got {chart}")
        target      = self.resolve_target(target)
        cap         = self.ctx.precision
        window      = B.window * self.window_factor
        B_wide      = B.with_window(window)
        identity    = B_wide.identity_like()
        V           = B_wide.minus_identity().prune(cap)
        initial_val = V.sup_val()
        if initial_val is INFINITY:
            return self.result(B_wide, identity, identity, 0, initial_val, [], target, False), identity, identity
        if initial_val <= 0:
            raise Not_Near_Identity(f"cartan_factor needs val(B - I) > 0, got {initial_val}")
        max_iter   = self.resolve_max_iter(target, initial_val, max_iter)
        left       = identity
        right      = identity
        trace      = []
        iterations = 0
        current    = initial_val
        while current < target:
            if iterations >= max_iter:
                raise Non_Convergence(f"no convergence to {target} in {max_iter} iterations", trace)
            C, D   = V.split()
            self.check_split(C, D)
            left   = identity.sub(C).mul(left , val_cap=cap)
            right  = right.mul(identity.add(D), val_cap=cap)
            CV     = C.mul(V, val_cap=cap)
            V      = (V.mul(D, val_cap=cap)
                      .sub(CV)
                      .sub(C.mul(D, val_cap=cap))
                      .sub(CV.mul(D, val_cap=cap))
                      .prune(cap))
            iterations += 1
            current     = V.sup_val()
            trace.append(current)
            logger.debug("cartan iteration %d: val(V_%d) = %s", iterations, iterations + 1, current)
            if V.truncated or left.truncated or right.truncated:
                logger.warning("cartan recursion hit the window %d after %d iterations", window, iterations)
                break
        truncated = V.truncated or left.truncated or right.truncated
        B1_star   = left .inverse_near_identity(cap)
        B2_star   = right.inverse_near_identity(cap)
        result    = self.result(B_wide, B1_star, B2_star, iterations, initial_val, trace, target, truncated)
        return result, left, right

    def result(self, B_wide, B1_star, B2_star, iterations, initial_val, trace, target, truncated):
        circle = B_wide.chart
        return Factorization__Result(n                = B_wide.n                                                   ,
                                     B1               = B1_star.with_chart(Chart.disc(circle.a))                   ,
                                     B2               = B2_star.with_chart(Chart.disc_at_infinity(circle.b))       ,
                                     iterations       = iterations                                                 ,
                                     residual_val     = self.residual_val(B_wide, B1_star, B2_star)                ,
                                     initial_val      = initial_val                                                ,
                                     decay_trace      = tuple(trace)                                               ,
                                     effective_window = B_wide.window                                              ,
                                     target           = target                                                     ,
                                     truncated        = bool(truncated or B1_star.truncated or B2_star.truncated)  )
