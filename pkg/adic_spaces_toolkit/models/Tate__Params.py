from adic_spaces_toolkit.padic.Rational__Val            import is_finite, rational_val, val_to_json
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec, Missing__Parameter
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Tate__Params(Type_Safe__Value):                                            # the Tate parameter q, 0 < |q| < 1
    vq : object = None                                                           # v(q), the circumference of the skeleton
    q  : object = None                                                           # Padic__Scalar, optional

    def __init__(self, vq=None, q=None):
        vq = rational_val(vq)
        if not is_finite(vq) or vq <= 0:
            raise Invalid__Spec(f"the Tate parameter needs 0 < v(q) < inf, got {vq}")
        if q is not None and q.val() != vq:
            raise Invalid__Spec(f"q has valuation {q.val()}, expected vq={vq}")
        super().__init__(vq=vq, q=q)

    @classmethod
    def from_q(cls, q) -> 'Tate__Params':
        return cls(vq=q.val(), q=q)

    @classmethod
    def from_vq(cls, vq) -> 'Tate__Params':
        return cls(vq=vq)

    def require_q(self):
        if self.q is None:
            raise Missing__Parameter(f"this operation needs the Tate parameter q itself, only v(q) = {self.vq} was given")
        return self.q

    def json(self):
        data = dict(vq=val_to_json(self.vq))
        if self.q is not None:
            data['q'] = self.q.json()
        return data
