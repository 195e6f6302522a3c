# ═══════════════════════════════════════════════════════════════════════════════
# Dual__Graph - vertices are the irreducible components of a special fibre,
# edges are their intersection points (multi-edges and loops allowed)
#
#   b1 = #edges - #vertices + #connected components
# ═══════════════════════════════════════════════════════════════════════════════

from adic_spaces_toolkit.models.Special_Fiber__Kind     import Special_Fiber__Kind
from adic_spaces_toolkit.utils.Toolkit__Errors          import Invalid__Spec
from adic_spaces_toolkit.utils.Type_Safe__Value         import Type_Safe__Value

DOT__SHAPES = { Special_Fiber__Kind.LINE      : 'box'     ,
                Special_Fiber__Kind.PROJ_LINE : 'ellipse' ,
                Special_Fiber__Kind.TORUS     : 'diamond' ,
                Special_Fiber__Kind.NODAL     : 'diamond' }


class Dual__Graph(Type_Safe__Value):
    vertices : tuple = ()                                                        # ((label, Special_Fiber__Kind), ...)
    edges    : tuple = ()                                                        # ((label_u, label_v, edge_label), ...)

    def __init__(self, vertices=(), edges=()):
        vertices = tuple(tuple(vertex) for vertex in vertices)
        edges    = tuple(tuple(edge)   for edge   in edges   )
        labels   = [label for label, _ in vertices]
        if len(set(labels)) != len(labels):
            raise Invalid__Spec(f"duplicate vertex labels in {labels}")
        known = set(labels)
        for u, v, _ in edges:
            if u not in known or v not in known:
                raise Invalid__Spec(f"edge ({u}, {v}) uses an unknown vertex")
        super().__init__(vertices=vertices, edges=edges)

    def vertex_labels(self) -> list:
        return [label for label, _ in self.vertices]

    def kind_of(self, label) -> Special_Fiber__Kind:
        for vertex, kind in self.vertices:
            if vertex == label:
                return kind
        raise Invalid__Spec(f"no vertex {label}")

    def neighbours(self, label) -> list:
        result = []
        for u, v, _ in self.edges:
            if u == label:
                result.append(v)
            elif v == label:
                result.append(u)
        return result

    def adjacent(self, u, v) -> bool:
        return any({a, b} == {u, v} for a, b, _ in self.edges)

    def components(self) -> list:
        parent = {label: label for label in self.vertex_labels()}

        def find(label):
            while parent[label] != label:
                parent[label] = parent[parent[label]]
                label = parent[label]
            return label

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        groups = {}
        for label in self.vertex_labels():
            groups.setdefault(find(label), []).append(label)
        return list(groups.values())

    @property
    def b1(self) -> int:
        return len(self.edges) - len(self.vertices) + len(self.components())

    def is_tree(self) -> bool:
        return self.b1 == 0 and len(self.components()) == 1

    def json(self):
        return dict(vertices = [dict(label=label, kind=kind.value) for label, kind in self.vertices]  ,
                    edges    = [dict(u=u, v=v, label=label) for u, v, label in self.edges]           ,
                    b1       = self.b1                                                              )

    def to_dot(self) -> str:
        ids   = {label: f"v{index}" for index, label in enumerate(self.vertex_labels())}
        lines = ['graph dual_graph {']
        for label, kind in self.vertices:
            lines.append(f'  {ids[label]} [label="{label}", shape={DOT__SHAPES[kind]}];')
        for u, v, label in self.edges:
            suffix = f' [label="{label}"]' if label else ''
            lines.append(f'  {ids[u]} -- {ids[v]}{suffix};')
        lines.append('}')
        return '\n'.join(lines)
