from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple
from ..errors import InvalidType

Matrix = Tuple[Tuple[int, ...], ...]

FAMILIES = "ABCDEFG"

# (smallest rank, largest rank or None)
_RANK_BOUNDS = {
    'A': (1, None),
    'B': (2, None),
    'C': (3, None),
    'D': (4, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}


@dataclass(frozen=True, order=True)
class SimpleType:
    """
    A connected Dynkin type.

    Attributes:
        family (str): One of 'A' .. 'G'.
        rank (int): Number of simple roots.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidType(f"rank must be an integer, got {self.rank!r}")
        low, high = _RANK_BOUNDS[self.family]
        if self.rank < low or (high is not None and self.rank > high):
            raise InvalidType(f"{self.family}{self.rank} is outside the admissible ranks")

    def __str__(self):
        return f"{self.family}{self.rank}"


def _edges(family: str, n: int):
    """Dynkin edges (i, j, C[i][j], C[j][i]) in Bourbaki numbering, 1-based."""
    chain = [(i, i + 1, -1, -1) for i in range(1, n)]
    if family == 'A':
        return chain
    if family == 'B':
        # alpha_n short
        return chain[:-1] + [(n - 1, n, -1, -2)]
    if family == 'C':
        # alpha_n long
        return chain[:-1] + [(n - 1, n, -2, -1)]
    if family == 'D':
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 2, n, -1, -1)]
    if family == 'E':
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        return [(i, j, -1, -1) for i, j in edges if j <= n]
    if family == 'F':
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    if family == 'G':
        # alpha_1 short
        return [(1, 2, -3, -1)]
    raise InvalidType(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType) -> Matrix:
    """
    Cartan matrix C[i][j] = <alpha_j, alpha_i^vee> of a connected type.

    Args:
        t (SimpleType): The Dynkin type.

    Returns:
        tuple of tuples: The integer matrix, rows indexed by coroots.

    Example Usage:
        >>> cartan_matrix(SimpleType('A', 2))
        ((2, -1), (-1, 2))
    """
    n = t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in _edges(t.family, n):
        C[i - 1][j - 1] = cij
        C[j - 1][i - 1] = cji
    return tuple(tuple(row) for row in C)


def simple_types(max_rank: int) -> List[SimpleType]:
    """Every valid connected type of rank at most ``max_rank``, families A to G."""
    out = []
    for family in FAMILIES:
        low, high = _RANK_BOUNDS[family]
        top = max_rank if high is None else min(high, max_rank)
        out.extend(SimpleType(family, n) for n in range(low, top + 1))
    return out
