from enum import Enum


class Point__Side(str, Enum):
    PLUS  = '+'                                                                  # v(T - c) = r + ε, just inside the disc
    MINUS = '-'                                                                  # v(T - c) = r - ε, just outside the disc
