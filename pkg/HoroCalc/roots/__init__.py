from ._cartan import SimpleType, cartan_matrix, simple_types, FAMILIES
from ._system import (RootSystem, NodeSubset, positive_roots, exponents, sub_exponents,
                      components, weyl_order, weyl_poincare, coset_poincare, pairing,
                      a_alpha, component_of, highest_root, is_minuscule, dynkin_shape)
