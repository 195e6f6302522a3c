from enum import Enum


class Special_Fiber__Kind(str, Enum):
    LINE      = 'Line'                                                           # A¹, the reduction of K°⟨T⟩
    PROJ_LINE = 'ProjLine'
    TORUS     = 'Torus'                                                          # Spec k[s, s⁻¹], the reduction of a circle
    NODAL     = 'Nodal'                                                          # Spec k[s, t]/(st), the reduction of a strict annulus
