from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value

TARGET__GENERIC      = 'generic'
TARGET__CLOSED_POINT = 'closed_point'
TARGET__NODE         = 'node'


class Specialization__Target(Type_Safe__Value):                                  # where sp sends a point of the generic fibre
    kind   : str = None
    vertex : str = None                                                          # vertex label
    other  : str = None                                                          # second vertex of a node
    label  : str = None                                                          # residue label of a closed point, arc label of a node

    def __init__(self, kind: str = None, vertex: str = None, other: str = None, label: str = None):
        super().__init__(kind   = kind                                   ,
                         vertex = vertex                                 ,
                         other  = None if other is None else str(other)  ,
                         label  = None if label is None else str(label)  )

    @classmethod
    def generic_of(cls, vertex):
        return cls(TARGET__GENERIC, str(vertex))

    @classmethod
    def closed_point_of(cls, vertex, residue):
        return cls(TARGET__CLOSED_POINT, str(vertex), label=str(residue))

    @classmethod
    def node_between(cls, vertex, other, label=None):
        return cls(TARGET__NODE, str(vertex), other=str(other), label=label)

    def vertices(self) -> tuple:
        return (self.vertex,) if self.other is None else (self.vertex, self.other)

    def json(self):
        data = dict(kind=self.kind, vertex=self.vertex)
        if self.other is not None:
            data['other'] = self.other
        if self.label is not None:
            data['label'] = self.label
        return data

    def __str__(self):
        if self.kind == TARGET__GENERIC:
            return f"GenericOf({self.vertex})"
        if self.kind == TARGET__CLOSED_POINT:
            return f"ClosedPointOf({self.vertex}, {self.label})"
        return f"NodeBetween({self.vertex}, {self.other})"
