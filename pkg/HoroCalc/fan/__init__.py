from ._cone import Cone, Facet, cone_generators, intersection_generators, dot
from ._triangulate import triangulate, interior_partition
from ._datum import ColoredCone, ColoredFan, HorosphericalDatum, rho_of_color, faces, decolorize
from ._fan import Violation, OrbitInfo, validate_fan, orbits, is_complete
from ._factorial import Diagnostic, carried_by, locally_factorial_diagnostics, is_simple, is_full_rank
