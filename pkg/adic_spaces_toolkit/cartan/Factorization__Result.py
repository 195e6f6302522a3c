from adic_spaces_toolkit.cartan.Laurent__Matrix         import Laurent__Matrix
from adic_spaces_toolkit.padic.Rational__Val            import val_to_json
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Factorization__Result(Type_Safe__Value):
    n                : int             = 0
    B1               : Laurent__Matrix = None                                    # B1* on the disc in T      (exponents >= 0)
    B2               : Laurent__Matrix = None                                    # B2* on the disc in T⁻¹    (exponents <= 0)
    iterations       : int             = 0
    residual_val     : object          = None                                    # val(B1*·B2* - B) on the circle
    initial_val      : object          = None                                    # val(V_1) = val(B - I)
    decay_trace      : tuple           = ()                                      # val(V_2), val(V_3), ...
    effective_window : int             = 0
    target           : object          = None
    truncated        : bool            = False

    def json(self):                                                              # valuations render as strings, "+inf" included
        return dict(n                = self.n                                              ,
                    iterations       = self.iterations                                     ,
                    residual_val     = val_to_json(self.residual_val)                      ,
                    initial_val      = val_to_json(self.initial_val)                       ,
                    decay_trace      = [val_to_json(value) for value in self.decay_trace]  ,
                    effective_window = self.effective_window                               ,
                    target           = val_to_json(self.target)                            ,
                    truncated        = self.truncated                                      ,
                    B1               = self.B1.json()                                      ,
                    B2               = self.B2.json()                                      )
