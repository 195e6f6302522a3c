# ═══════════════════════════════════════════════════════════════════════════════
# Type_Safe__Value - Type_Safe schema that is read-only once built
# Equality and hashing go through the annotated fields, in declaration order
# ═══════════════════════════════════════════════════════════════════════════════

from osbot_utils.type_safe.Type_Safe                    import Type_Safe

FIELD__FROZEN = '_frozen'


class Type_Safe__Value(Type_Safe):

    def __init__(self, **kwargs):
        super().__init__(**{name: value for name, value in kwargs.items() if value is not None})   # None keeps the declared default
        object.__setattr__(self, FIELD__FROZEN, True)

    def __setattr__(self, name, value):
        if self.__dict__.get(FIELD__FROZEN):
            raise AttributeError(f"{type(self).__name__} is immutable, cannot set '{name}'")
        super().__setattr__(name, value)

    def value_fields(self) -> tuple:
        return tuple(type(self).__annotations__)

    def value_key(self) -> tuple:
        return tuple(getattr(self, name) for name in self.value_fields())

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return self.value_key() == other.value_key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((type(self).__name__,) + self.value_key())

    def __repr__(self):
        fields = ', '.join(f"{name}={getattr(self, name)!r}" for name in self.value_fields())
        return f"{type(self).__name__}({fields})"
