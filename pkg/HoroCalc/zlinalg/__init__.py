from ._solve import (primitive, integral, rank, orthogonal_complement, solve_rational,
                     is_solvable, int_matrix, rat_matrix, as_fraction)
from ._snf import (smith_normal_form, is_partial_basis, saturated_basis,
                   parallelepiped_points, lattice_index)
