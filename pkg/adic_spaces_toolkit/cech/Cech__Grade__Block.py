from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Cech__Grade__Block(Type_Safe__Value):                                      # d⁰ restricted to one exponent class
    grade  : object = None                                                       # int, or (i, j) for the bigraded bidisc basis
    cols   : tuple  = ()                                                         # degree-0 basis labels (piece, grade)
    rows   : tuple  = ()                                                         # degree-1 basis labels (overlap, grade)
    matrix : tuple  = ()                                                         # len(rows) x len(cols) Padic__Scalar entries

    def grade_json(self):
        return list(self.grade) if isinstance(self.grade, tuple) else self.grade
