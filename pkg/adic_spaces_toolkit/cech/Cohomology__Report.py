from osbot_utils.type_safe.Type_Safe import Type_Safe


class Cohomology__Report(Type_Safe):
    spec             : dict
    window           : int
    prime            : int
    precision        : int
    threshold        : int
    dims             : list                                                      # [dim H⁰, dim H¹]
    grades           : list                                                      # [{g, divisors, h0, h1}, ...]
    truncation_flags : list

    def h0(self) -> int:
        return self.dims[0]

    def h1(self) -> int:
        return self.dims[1]

    def grade(self, g) -> dict:
        g = list(g) if isinstance(g, tuple) else g
        for entry in self.grades:
            if entry['g'] == g:
                return entry
        return None

    def json(self):
        return dict(spec             = self.spec                  ,
                    D                = self.window                ,
                    N                = self.precision             ,
                    p                = self.prime                 ,
                    threshold        = self.threshold             ,
                    dims             = list(self.dims)            ,
                    grades           = list(self.grades)          ,
                    truncation_flags = list(self.truncation_flags))
