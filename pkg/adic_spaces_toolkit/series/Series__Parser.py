# ═══════════════════════════════════════════════════════════════════════════════
# Series__Parser - text -> Laurent__Series
#
#   "T^2 - 5", "3 + T + 5*T^-1", "1/5*T"      expression in T (parsed by sympy)
#   "0:3 1:1 -1:5", "2:1/25,-1:-3"             sparse exp:coeff pairs
# ═══════════════════════════════════════════════════════════════════════════════

import re
from fractions                                          import Fraction
from tokenize                                           import TokenError
from sympy                                              import Add, Symbol, SympifyError, expand
from sympy.parsing.sympy_parser                         import parse_expr, standard_transformations, convert_xor, implicit_multiplication_application
from adic_spaces_toolkit.series.Laurent__Series         import Laurent__Series
from adic_spaces_toolkit.utils.Toolkit__Errors          import Parse__Error

SYMBOL__T          = Symbol('T')
PARSER__TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)
REGEX__SPARSE_PAIR = re.compile(r'^\s*(-?\d+)\s*:\s*(-?\d+(?:/\d+)?)\s*$')


class Series__Parser:

    def __init__(self, ctx, chart, window):
        self.ctx    = ctx
        self.chart  = chart
        self.window = window

    def parse(self, text: str) -> Laurent__Series:
        return self.series(self.parse_coeffs(text))

    def series(self, coeffs: dict) -> Laurent__Series:
        return Laurent__Series(self.ctx, self.chart, self.window, coeffs)

    def parse_coeffs(self, text: str) -> dict:
        if text is None or not text.strip():
            raise Parse__Error("empty series text")
        if ':' in text:
            return self.parse_sparse(text)
        return self.parse_expression(text)

    def parse_sparse(self, text: str) -> dict:
        coeffs = {}
        for chunk in re.split(r'[\s,;]+', text.strip()):
            if not chunk:
                continue
            match = REGEX__SPARSE_PAIR.match(chunk)
            if match is None:
                raise Parse__Error(f"bad exp:coeff pair {chunk!r}")
            exponent = int(match.group(1))
            coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + Fraction(match.group(2))
        return coeffs

    def parse_expression(self, text: str) -> dict:
        try:
            expression = expand(parse_expr(text, local_dict={'T': SYMBOL__T}, transformations=PARSER__TRANSFORMS))
        except (SympifyError, SyntaxError, TypeError, ValueError, TokenError) as error:
            raise Parse__Error(f"cannot parse series {text!r}: {error}") from error
        coeffs = {}
        for term in Add.make_args(expression):
            coeff, exponent = term.as_coeff_exponent(SYMBOL__T)
            if not coeff.is_Rational or not exponent.is_Integer:
                raise Parse__Error(f"term {term} is not a rational multiple of an integral power of T")
            exponent          = int(exponent)
            coeffs[exponent]  = coeffs.get(exponent, Fraction(0)) + Fraction(int(coeff.p), int(coeff.q))
        return {exponent: coeff for exponent, coeff in coeffs.items() if coeff != 0}
