from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional
from ._cone import dot
from ._datum import HorosphericalDatum
from ..zlinalg import is_partial_basis, lattice_index, rank
from ..errors import NotIndependent


@dataclass(frozen=True)
class Diagnostic:
    """
    A condition that failed on one maximal cone.

    Attributes:
        cone (int): Index of the maximal cone, None for whole-datum conditions.
        condition (str): Machine-readable name of the failed condition.
        message (str): Human readable description.
    """

    cone: Optional[int]
    condition: str
    message: str

    def to_dict(self):
        return {"cone": self.cone, "condition": self.condition, "message": self.message}


def carried_by(d: HorosphericalDatum, colors, ray) -> List[int]:
    """Colors whose rho is a positive multiple of ``ray``."""
    out = []
    for alpha in sorted(colors):
        rho = d.rho(alpha)
        if any(rho) and rank([rho, ray]) == 1 and dot(rho, ray) > 0:
            out.append(alpha)
    return out


def locally_factorial_diagnostics(d: HorosphericalDatum) -> List[Diagnostic]:
    """
    Failures of the local factoriality criterion on the maximal cones.

    A colored cone passes when rho is injective on its colors, its rays are
    part of a basis of N, and every rho of a color is one of its rays.
    """
    out = []
    for i, colored in enumerate(d.fan.maximal_cones):
        for a, b in combinations(sorted(colored.colors), 2):
            if d.rho(a) == d.rho(b):
                out.append(Diagnostic(i, "ColorsNotInjective",
                                      f"colors {a} and {b} have the same rho {d.rho(a)}"))
        rays = colored.cone.rays
        try:
            if not is_partial_basis(rays):
                out.append(Diagnostic(i, "NotPartialBasis", f"rays {list(rays)} span a sublattice of index "
                                      f"{lattice_index(rays)} in their saturation"))
        except NotIndependent:
            out.append(Diagnostic(i, "NotPartialBasis", f"rays {list(rays)} are linearly dependent"))
        for alpha in sorted(colored.colors):
            if d.rho(alpha) not in rays:
                out.append(Diagnostic(i, "RhoNotRay", f"rho of color {alpha} = {d.rho(alpha)} is not a ray"))
    return out


def is_simple(d: HorosphericalDatum) -> bool:
    """One maximal colored cone."""
    return len(d.fan.maximal_cones) == 1


def is_full_rank(d: HorosphericalDatum) -> bool:
    return all(c.dim == d.rank for c in d.fan.maximal_cones)
