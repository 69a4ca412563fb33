import math
from fractions import Fraction
from typing import List, Sequence, Tuple
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from ..errors import Inconsistent, ZeroVector

Vector = Tuple[int, ...]


def _qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def as_fraction(element) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def int_matrix(rows: Sequence[Sequence[int]], ncols: int = None) -> DomainMatrix:
    ncols = len(rows[0]) if ncols is None else ncols
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (len(rows), ncols), ZZ)


def rat_matrix(rows: Sequence[Sequence], ncols: int = None) -> DomainMatrix:
    ncols = len(rows[0]) if ncols is None else ncols
    return DomainMatrix([[_qq(x) for x in row] for row in rows], (len(rows), ncols), QQ)


def primitive(v: Sequence[int]) -> Vector:
    """
    Divide a lattice vector by the gcd of its entries.

    Raises:
        ZeroVector: If v is the zero vector.
    """
    g = 0
    for x in v:
        g = math.gcd(g, int(x))
    if g == 0:
        raise ZeroVector(f"the zero vector {tuple(v)} has no primitive generator")
    return tuple(int(x) // g for x in v)


def integral(v: Sequence) -> Vector:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return primitive([int(x * den) for x in v])


def rank(vectors: Sequence[Sequence]) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors or not vectors[0]:
        return 0
    return rat_matrix(vectors).rank()


def _rref(rows, ncols):
    reduced, pivots = rat_matrix(rows, ncols).rref()
    return [[as_fraction(x) for x in row] for row in reduced.to_list()], tuple(pivots)


def orthogonal_complement(vectors: Sequence[Sequence[int]], dim: int) -> List[Vector]:
    """Primitive integer basis of {u : u.v = 0 for all v in vectors}, free columns in order."""
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    reduced, pivots = _rref(vectors, dim)
    basis = []
    for free in range(dim):
        if free in pivots:
            continue
        u = [Fraction(0)] * dim
        u[free] = Fraction(1)
        for row, p in enumerate(pivots):
            u[p] = -reduced[row][free]
        basis.append(integral(u))
    return basis


def solve_rational(A: Sequence[Sequence[int]], b: Sequence) -> Tuple[Fraction, ...]:
    """
    Solve A x = b over the rationals.

    The augmented matrix is brought to reduced row echelon form (pivots chosen
    left to right); free variables are set to zero, so the returned solution is
    reproducible.

    Args:
        A: Integer (or rational) matrix given as a list of rows.
        b: Right hand side, one entry per row of A.

    Returns:
        tuple of Fraction: A solution x.

    Raises:
        Inconsistent: If the system has no solution.
    """
    rows = [list(r) for r in A]
    if len(rows) != len(b):
        raise ValueError(f"{len(rows)} equations but {len(b)} right hand sides")
    ncols = len(rows[0]) if rows else 0
    if not rows:
        return tuple(Fraction(0) for _ in range(ncols))
    if ncols == 0:
        if any(Fraction(x) for x in b):
            raise Inconsistent("nonzero right hand side for an empty system")
        return ()

    reduced, pivots = _rref([r + [b_i] for r, b_i in zip(rows, b)], ncols + 1)
    if ncols in pivots:
        raise Inconsistent("the right hand side is not in the column span")
    x = [Fraction(0)] * ncols
    for row, p in enumerate(pivots):
        x[p] = reduced[row][ncols]
    return tuple(x)


def is_solvable(A, b) -> bool:
    try:
        solve_rational(A, b)
    except Inconsistent:
        return False
    return True
