# ═══════════════════════════════════════════════════════════════════════════════
# J__Invariant - the q-expansion of j on the Tate curve, in exact arithmetic
#
#   E4 = 1 + 240 Σ σ3(n) q^n        E6 = 1 - 504 Σ σ5(n) q^n
#   Δ  = q Π (1 - q^n)^24 = (E4³ - E6²) / 1728
#   j  = E4³ / Δ = q⁻¹ + 744 + 196884 q + 21493760 q² + ...
# ═══════════════════════════════════════════════════════════════════════════════

import logging
from sympy                                              import QQ, divisor_sigma
from sympy.polys.rings                                  import ring
from sympy.polys.ring_series                            import rs_mul, rs_pow, rs_series_inversion
from osbot_utils.type_safe.Type_Safe                    import Type_Safe
from adic_spaces_toolkit.config                         import J_SERIES__STEP_BUDGET
from adic_spaces_toolkit.models.J__Series__Budget       import J__Series__Budget
from adic_spaces_toolkit.models.Tate__Params            import Tate__Params
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec

logger = logging.getLogger(__name__)

E4__FACTOR    = 240
E6__FACTOR    = -504
DELTA__POWER  = 24
J__NORMALISER = 1728

Q_SERIES, q_var = ring('q', QQ)


class J__Invariant(Type_Safe):
    step_budget : int = J_SERIES__STEP_BUDGET

    def budget(self) -> J__Series__Budget:
        return J__Series__Budget(limit=self.step_budget)

    def check_terms(self, terms: int):
        if terms < 1:
            raise Invalid__Spec(f"the j-expansion needs terms >= 1, got {terms}")

    # ═══════════════════════════════════════════════════════════════════════════════
    # Truncated power series in q (sympy ring series, precision = length)
    # ═══════════════════════════════════════════════════════════════════════════════

    def series(self, coefficients: list):
        return Q_SERIES.from_dict({(k,): value for k, value in enumerate(coefficients) if value})

    def coefficients(self, series, length: int) -> list:
        values = [QQ.to_sympy(series.get((k,), QQ.zero)) for k in range(length)]
        for value in values:
            if not value.is_integer:
                raise Invalid__Spec(f"non-integral j coefficient {value}")
        return [int(value) for value in values]

    def eisenstein(self, factor: int, sigma: int, length: int) -> list:
        return [1] + [factor * int(divisor_sigma(n, sigma)) for n in range(1, length)]

    def delta_series(self, length: int, budget: J__Series__Budget):             # Π (1 - q^n)^24
        product = Q_SERIES.one
        for n in range(1, length):
            budget.spend(2 * length)
            product = rs_mul(product, rs_pow(1 - q_var**n, DELTA__POWER, q_var, length), q_var, length)
        return product

    def delta_over_q(self, length: int) -> list:
        return self.coefficients(self.delta_series(length, self.budget()), length)

    def e4_cube(self, length: int, budget: J__Series__Budget):
        budget.spend(length)
        return rs_pow(self.series(self.eisenstein(E4__FACTOR, 3, length)), 3, q_var, length)

    def divide(self, numerator, denominator, length: int, budget: J__Series__Budget):
        budget.spend(2 * length)
        return rs_mul(numerator, rs_series_inversion(denominator, q_var, length), q_var, length)

    # ═══════════════════════════════════════════════════════════════════════════════
    # Public operations
    # ═══════════════════════════════════════════════════════════════════════════════

    def expansion_with_steps(self, terms: int) -> tuple:                         # (coefficients, steps spent by this call)
        self.check_terms(terms)
        budget = self.budget()
        values = self.divide(self.e4_cube(terms, budget), self.delta_series(terms, budget), terms, budget)
        logger.debug("j-expansion: %d terms in %d steps", terms, budget.steps)
        return self.coefficients(values, terms), budget.steps

    def expansion(self, terms: int) -> list:                                     # j_expansion: coefficients of q⁻¹, q⁰, q¹, ...
        return self.expansion_with_steps(terms)[0]

    def expansion_via_e6(self, terms: int) -> list:                              # j = 1728 E4³ / (E4³ - E6²)
        self.check_terms(terms)
        budget  = self.budget()
        length  = terms + 1
        e4_cube = self.e4_cube(length, budget)
        budget.spend(length)
        e6_sq   = rs_pow(self.series(self.eisenstein(E6__FACTOR, 5, length)), 2, q_var, length)
        delta   = self.series(self.coefficients(e4_cube - e6_sq, length)[1:])   # 1728 Δ / q
        values  = self.divide(J__NORMALISER * e4_cube, delta, terms, budget)
        return self.coefficients(values, terms)

    def valuation(self, params: Tate__Params):                                   # j_valuation: v(j(q)) = -v(q)
        return -params.vq

    def value(self, params: Tate__Params, terms: int = 4) -> Padic__Scalar:     # Σ c_k q^(k-1), truncated after `terms` terms
        q      = params.require_q()
        coeffs = self.expansion(terms)
        return Padic__Scalar.sum_of(q.ctx, [q.pow(index - 1).mul(coeff) for index, coeff in enumerate(coeffs) if coeff])
