from ._omega import OmegaFunction, compute_omega, gorenstein_index, color_weights, evaluate
from ._sums import cone_interior_sum, lattice_sum
from ._invariants import (e_homogeneous, e_polynomial, stringy_E, stringy_euler, euler,
                          closed_form_applies, closed_form_euler, weighted_SR_poincare,
                          stanley_reisner_alternating, stringy_E_from_series, sr_series)
from ._oracle import series_oracle, OracleComparison, SeriesOracle, compare_oracle
