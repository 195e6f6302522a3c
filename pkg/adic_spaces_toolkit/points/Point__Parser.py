# ═══════════════════════════════════════════════════════════════════════════════
# Point__Parser - "x(c)", "eta(c,r)", "eta(c,r)+", "eta(c,r)-"  (η also accepted)
# ═══════════════════════════════════════════════════════════════════════════════

import re
from adic_spaces_toolkit.padic.Padic__Scalar            import Padic__Scalar
from adic_spaces_toolkit.padic.Rational__Val            import rational_val
from adic_spaces_toolkit.points.Point__Side             import Point__Side
from adic_spaces_toolkit.points.Point__Type_1           import Point__Type_1
from adic_spaces_toolkit.points.Point__Type_2           import Point__Type_2
from adic_spaces_toolkit.points.Point__Type_5           import Point__Type_5
from adic_spaces_toolkit.utils.Toolkit__Errors          import Parse__Error, Invalid__Spec

REGEX__TYPE_1 = re.compile(r'^x\(\s*([^,()]+?)\s*\)$')
REGEX__ETA    = re.compile(r'^(?:eta|η)\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)\s*([+-]?)$')


class Point__Parser:

    def __init__(self, ctx):
        self.ctx = ctx

    def parse(self, text: str):
        body  = (text or '').strip()
        match = REGEX__TYPE_1.match(body)
        if match:
            return Point__Type_1(self.ctx.scalar(match.group(1)))
        match = REGEX__ETA.match(body)
        if match is None:
            raise Parse__Error(f"cannot parse point {text!r}: expected x(c), eta(c,r), eta(c,r)+ or eta(c,r)-")
        center = self.ctx.scalar(match.group(1))
        radius = rational_val(match.group(2))
        try:
            if match.group(3):
                return Point__Type_5(center, radius, Point__Side(match.group(3)))
            return Point__Type_2(center, radius)
        except Invalid__Spec as error:
            raise Parse__Error(f"cannot parse point {text!r}: {error}") from error

    def parse_many(self, text: str) -> list:                                     # ";"-separated list
        return [self.parse(chunk) for chunk in text.split(';') if chunk.strip()]

    def from_json(self, data: dict):
        center = Padic__Scalar.from_json(self.ctx, data.get('c'))
        kind   = data.get('type')
        if kind == 1:
            return Point__Type_1(center)
        if kind == 2:
            return Point__Type_2(center, rational_val(data.get('r')))
        if kind == 5:
            return Point__Type_5(center, rational_val(data.get('r')), Point__Side(data.get('side')))
        raise Parse__Error(f"unknown point type {kind!r}")
