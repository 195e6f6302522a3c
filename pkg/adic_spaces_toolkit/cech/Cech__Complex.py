# ═══════════════════════════════════════════════════════════════════════════════
# Cech__Complex - the two-term complex  C⁰ = O(U1) x O(U2)  ->  C¹ = O(U12)
#
# Every cover built here has monomial restriction maps, so d⁰ is block diagonal
# over the exponent lattice: one Cech__Grade__Block per exponent class
# ═══════════════════════════════════════════════════════════════════════════════

from adic_spaces_toolkit.cech.Cech__Space__Spec         import Cech__Space__Spec
from adic_spaces_toolkit.padic.Padic__Context           import Padic__Context
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


class Cech__Complex(Type_Safe__Value):
    spec   : Cech__Space__Spec = None
    window : int               = 0
    ctx    : Padic__Context    = None
    pieces : tuple             = ()                                              # names of the degree-0 pieces
    blocks : tuple             = ()                                              # Cech__Grade__Block per grade

    def degree0_basis(self) -> list:
        return [label for block in self.blocks for label in block.cols]

    def degree1_basis(self) -> list:
        return [label for block in self.blocks for label in block.rows]

    def term_dims(self) -> tuple:
        return len(self.degree0_basis()), len(self.degree1_basis())

    def grade_of(self, label):
        return label[1]

    def block(self, grade):
        for block in self.blocks:
            if block.grade == grade:
                return block
        raise Invalid__Spec(f"no grade {grade} in a complex of window {self.window}")

    def apply_d0(self, cochain: dict) -> dict:                                   # {degree-0 label: scalar} -> {degree-1 label: scalar}
        known = set(self.degree0_basis())
        for label in cochain:
            if label not in known:
                raise Invalid__Spec(f"{label} is not a degree-0 basis label")
        image = {}
        for block in self.blocks:
            for row_index, row_label in enumerate(block.rows):
                terms = []
                for col_index, col_label in enumerate(block.cols):
                    value = cochain.get(col_label)
                    if value is not None:
                        terms.append(block.matrix[row_index][col_index].mul(self.ctx.scalar(value)))
                total = Padic__Scalar.sum_of(self.ctx, terms)
                if not total.is_zero():
                    image[row_label] = total
        return image

    def constant_cochain(self) -> dict:                                          # the function 1 on every piece
        zero_grade = (0, 0) if self.spec.is_bigraded() else 0
        return {label: self.ctx.one() for label in self.block(zero_grade).cols}

    def full_matrix(self) -> list:                                               # assembled, non-graded d⁰
        rows  = self.degree1_basis()
        cols  = self.degree0_basis()
        r_pos = {label: index for index, label in enumerate(rows)}
        c_pos = {label: index for index, label in enumerate(cols)}
        zero  = self.ctx.zero()
        full  = [[zero] * len(cols) for _ in rows]
        for block in self.blocks:
            for row_index, row_label in enumerate(block.rows):
                for col_index, col_label in enumerate(block.cols):
                    full[r_pos[row_label]][c_pos[col_label]] = block.matrix[row_index][col_index]
        return full
