from enum import Enum


class Cech__Space__Kind(str, Enum):
    PROJ_LINE       = 'p1'
    ANNULUS         = 'annulus'
    TATE_CURVE      = 'tate'
    BIDISC_BOUNDARY = 'bidisc'
