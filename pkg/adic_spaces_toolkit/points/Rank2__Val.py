# ═══════════════════════════════════════════════════════════════════════════════
# Rank2__Val - values in the rank-2 group Q ⊕ Z·ε, ordered lexicographically
# Rank-1 values embed with eps_coeff = 0
# ═══════════════════════════════════════════════════════════════════════════════

from functools                                          import total_ordering
from adic_spaces_toolkit.padic.Rational__Val            import INFINITY, rational_val, val_to_compact_json
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value


@total_ordering
class Rank2__Val(Type_Safe__Value):
    main      : object = None
    eps_coeff : int    = 0

    def __init__(self, main=None, eps_coeff: int = 0):
        main = rational_val(main)
        super().__init__(main=main, eps_coeff=0 if main is INFINITY else int(eps_coeff))

    @classmethod
    def infinity(cls):
        return cls(INFINITY, 0)

    def key(self):
        return self.main, self.eps_coeff

    def __eq__(self, other):
        if not isinstance(other, Rank2__Val):
            return NotImplemented
        return self.main == other.main and self.eps_coeff == other.eps_coeff

    def __lt__(self, other):
        if not isinstance(other, Rank2__Val):
            return NotImplemented
        if self.main != other.main:
            return self.main < other.main
        return self.eps_coeff < other.eps_coeff

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        if not isinstance(other, Rank2__Val):
            return NotImplemented
        return Rank2__Val(self.main + other.main, self.eps_coeff + other.eps_coeff)

    def is_rank_one(self) -> bool:
        return self.eps_coeff == 0

    def json(self):
        return [val_to_compact_json(self.main), self.eps_coeff]

    def __str__(self):
        if self.eps_coeff == 0:
            return str(self.main)
        sign = '+' if self.eps_coeff > 0 else '-'
        return f"{self.main} {sign} {abs(self.eps_coeff)}ε"
