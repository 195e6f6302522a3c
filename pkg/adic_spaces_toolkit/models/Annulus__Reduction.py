from sympy                                              import Poly
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Annulus__Reduction(Type_Safe__Value):                                     # image of an integral function in k[s, t]/(st)
    prime    : int  = 0
    s_poly   : Poly = None
    t_poly   : Poly = None
    constant : int  = 0

    def s_coeffs(self) -> dict:
        return poly_coeffs(self.s_poly, self.prime)

    def t_coeffs(self) -> dict:
        return poly_coeffs(self.t_poly, self.prime)

    def json(self):
        return dict(p        = self.prime                                                   ,
                    s_poly   = [[degree, coeff] for degree, coeff in sorted(self.s_coeffs().items())],
                    t_poly   = [[degree, coeff] for degree, coeff in sorted(self.t_coeffs().items())],
                    constant = self.constant                                                 )

    def __str__(self):
        return f"({self.s_poly.as_expr()}, {self.t_poly.as_expr()}) over F_{self.prime}"


def poly_coeffs(poly: Poly, prime: int) -> dict:                                 # {degree: coefficient in [0, p)}, zero terms dropped
    coeffs = {}
    for (degree,), coeff in poly.terms():
        value = int(coeff) % prime
        if value:
            coeffs[degree] = value
    return coeffs
