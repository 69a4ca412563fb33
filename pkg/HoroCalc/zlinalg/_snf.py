import itertools
import math
from fractions import Fraction
from typing import List, Sequence, Tuple
from sympy import QQ
from sympy.polys.matrices.normalforms import smith_normal_form as _sympy_snf, smith_normal_decomp
from ._solve import Vector, int_matrix, rank, as_fraction
from ..errors import NotIndependent


def _ints(matrix) -> List[List[int]]:
    return [[int(x) for x in row] for row in matrix.to_list()]


def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """
    Elementary divisors of an integer matrix.

    Returns:
        tuple of int: The min(rows, cols) diagonal entries d_1 | d_2 | ...,
        nonnegative, zeros last.

    Example Usage:
        >>> smith_normal_form([[2, 0], [0, 3]])
        (1, 6)
    """
    rows = [list(r) for r in m]
    if not rows or not rows[0]:
        return ()
    diag = _ints(_sympy_snf(int_matrix(rows)))
    return tuple(abs(diag[i][i]) for i in range(min(len(rows), len(rows[0]))))


def _decompose(columns: Sequence[Vector]):
    # E has the vectors as columns; D = S E T
    dim = len(columns[0])
    E = int_matrix([[v[i] for v in columns] for i in range(dim)], len(columns))
    D, S, T = smith_normal_decomp(E)
    return _ints(D), S, _ints(T)


def is_partial_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """
    Whether the vectors extend to a Z-basis of Z^r.

    Raises:
        NotIndependent: If the vectors are linearly dependent over Q.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return True
    if rank(vectors) < len(vectors):
        raise NotIndependent(f"{vectors} are linearly dependent")
    return all(d == 1 for d in smith_normal_form(vectors))


def saturated_basis(vectors: Sequence[Sequence[int]], dim: int) -> List[Vector]:
    """Z-basis of the lattice Z^dim intersected with the span of the vectors."""
    vectors = [tuple(v) for v in vectors if any(v)]
    if not vectors:
        return []
    k = rank(vectors)
    D, S, _ = _decompose(vectors)
    S_inv = [[as_fraction(x) for x in row] for row in S.to_dense().convert_to(QQ).inv().to_list()]
    return [tuple(int(S_inv[i][j]) for i in range(dim)) for j in range(k)]


def parallelepiped_points(vectors: Sequence[Sequence[int]]) -> List[Vector]:
    """
    Lattice points of the half-open parallelepiped {sum l_i v_i : 0 < l_i <= 1}.

    With D = S E T the Smith decomposition of the matrix E whose columns are
    the vectors, the cosets of Z^r modulo the sublattice they span are indexed
    by j in prod [0, d_i); l = T (j_i / d_i) reduced into (0, 1] gives the
    representative. Exactly prod d_i points are returned, sorted.

    Raises:
        NotIndependent: If the vectors are linearly dependent over Q.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return [()]
    if rank(vectors) < len(vectors):
        raise NotIndependent(f"{vectors} are linearly dependent")
    k, dim = len(vectors), len(vectors[0])
    D, _, T = _decompose(vectors)
    divisors = [abs(D[i][i]) for i in range(k)]

    points = set()
    for j in itertools.product(*(range(d) for d in divisors)):
        mu = [Fraction(j_i, d) for j_i, d in zip(j, divisors)]
        lam = []
        for row in T:
            value = sum((t * m for t, m in zip(row, mu)), Fraction(0))
            lam.append(value - math.ceil(value) + 1)
        point = [sum(l * v[i] for l, v in zip(lam, vectors)) for i in range(dim)]
        points.add(tuple(int(x) for x in point))
    return sorted(points)


def lattice_index(vectors: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by independent vectors in its saturation."""
    return math.prod(d for d in smith_normal_form(vectors) if d)
