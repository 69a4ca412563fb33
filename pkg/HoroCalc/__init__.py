from .config import Config, config
from .base import BaseHoro
from .roots import RootSystem, SimpleType
from .fan import Cone, ColoredCone, ColoredFan, HorosphericalDatum, validate_fan, orbits
from .qfun import QPoly, QRat
from .stringy import (compute_omega, stringy_E, e_polynomial, e_homogeneous, stringy_euler, euler,
                      weighted_SR_poincare, series_oracle, compare_oracle)
from .checks import (check_q_gorenstein, check_locally_factorial, check_smooth, check_stringy_smooth,
                     invariant_report)
from .document import parse, render_document
from .sweep import minuscule_table, smoothness_ladder
from .cli import run, main
from .argparse import arg_parser
