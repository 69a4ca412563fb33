import math
import pytest
from fractions import Fraction
from hypothesis import assume, given, settings, strategies as st
from HoroCalc.zlinalg import (integral, is_partial_basis, lattice_index, orthogonal_complement,
                              parallelepiped_points, primitive, rank, saturated_basis,
                              smith_normal_form, solve_rational)
from HoroCalc.errors import Inconsistent, NotIndependent, ZeroVector

small = st.integers(min_value=-6, max_value=6)


def test_smith_normal_form():
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)
    assert smith_normal_form([[1, 1], [1, -1]]) == (1, 2)
    assert smith_normal_form([[2, 4]]) == (2,)


def test_partial_basis():
    assert is_partial_basis([(1, 0), (0, 1)])
    assert is_partial_basis([(1, 2, 3)])
    assert not is_partial_basis([(1, 1), (1, -1)])
    with pytest.raises(NotIndependent):
        is_partial_basis([(1, 2), (2, 4)])


def test_parallelepiped_points():
    assert parallelepiped_points([(1, 0), (0, 1)]) == [(1, 1)]
    assert parallelepiped_points([(1, 0), (1, 2)]) == [(1, 1), (2, 2)]
    assert parallelepiped_points([(1, 0, 0), (0, 1, 0)]) == [(1, 1, 0)]
    assert lattice_index([(1, 0), (1, 2)]) == 2


def test_saturated_basis():
    basis = saturated_basis([(2, 0)], 2)
    assert basis in ([(1, 0)], [(-1, 0)])
    basis = saturated_basis([(1, 1, 0), (1, -1, 0)], 3)
    assert len(basis) == 2 and lattice_index(basis) == 1
    assert all(v[2] == 0 for v in basis)


def test_solve_rational():
    assert solve_rational([[1, 0], [1, 2]], [-1, -1]) == (Fraction(-1), Fraction(0))
    assert solve_rational([[2, 0]], [-1]) == (Fraction(-1, 2), Fraction(0))
    with pytest.raises(Inconsistent):
        solve_rational([[1, 0], [1, 0]], [-1, -2])


def test_orthogonal_complement():
    assert orthogonal_complement([(1, 1)], 2) == [(-1, 1)]
    assert orthogonal_complement([], 2) == [(1, 0), (0, 1)]
    assert rank([(1, 2, 3), (2, 4, 6)]) == 1


def test_primitive():
    assert primitive((2, 4)) == (1, 2)
    assert primitive((0, -3)) == (0, -1)
    assert integral([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


@given(st.lists(small, min_size=1, max_size=4))
def test_primitive_is_primitive(v):
    assume(any(v))
    p = primitive(v)
    assert math.gcd(*p) == 1
    assert rank([p, v]) == 1


@settings(max_examples=40, deadline=None)
@given(small, small, small, small)
def test_snf_product_is_determinant(a, b, c, d):
    det = a * d - b * c
    assume(det != 0)
    divisors = smith_normal_form([[a, b], [c, d]])
    assert math.prod(divisors) == abs(det)
    assert divisors[1] % divisors[0] == 0
    assert len(parallelepiped_points([(a, c), (b, d)])) == abs(det)


def unimodular(n, moves):
    """Product of elementary row operations applied to the identity."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for i, j, k in moves:
        i, j = i % n, j % n
        if i == j:
            U[i], U[(i + 1) % n] = U[(i + 1) % n], U[i]
        else:
            U[i] = [a + k * b for a, b in zip(U[i], U[j])]
    return U


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


moves = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2)), max_size=6)
matrices = st.lists(st.lists(small, min_size=3, max_size=3), min_size=2, max_size=3)


@settings(max_examples=40, deadline=None)
@given(matrices, moves, moves)
def test_snf_is_unimodular_invariant(m, left, right):
    U = unimodular(len(m), left)
    V = unimodular(3, right)
    expected = smith_normal_form(m)
    assert smith_normal_form(matmul(U, m)) == expected
    assert smith_normal_form(matmul(m, V)) == expected
    assert smith_normal_form(matmul(matmul(U, m), V)) == expected
