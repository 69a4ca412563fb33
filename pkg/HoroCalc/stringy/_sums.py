import logging
from typing import Sequence
from ._omega import OmegaFunction, compute_omega, evaluate
from ..fan import Cone, HorosphericalDatum, interior_partition
from ..qfun import QPoly, QRat
from ..zlinalg import parallelepiped_points
from ..errors import InternalError, NonNegativeWeight

logger = logging.getLogger(__name__)


def _simplicial_sum(cell: Cone, omega, scale) -> QRat:
    num = QPoly.zero()
    for b in parallelepiped_points(cell.rays):
        value = evaluate(omega, b)
        if scale is not None and (value * scale).denominator != 1:
            raise InternalError(f"omega{b} = {value} is not in (1/{scale})Z")
        num = num + QPoly.monomial(value)
    den = QPoly.one()
    for e in cell.rays:
        den = den * (1 - QPoly.monomial(evaluate(omega, e)))
    return QRat(num, den)


def cone_interior_sum(c: Cone, omega: Sequence, scale: int = None) -> QRat:
    """
    Sum of q^omega(n) over the lattice points n in the relative interior of c.

    Simplicial cones use the half-open box decomposition; other cones are
    split into the simplicial pieces of ``interior_partition``.

    Args:
        c (Cone): The cone.
        omega: Rational covector, negative on every ray of c.
        scale (int): If given, every exponent is checked to lie in (1/scale)Z.

    Raises:
        NonNegativeWeight: If omega(e) >= 0 for some ray e.
    """
    if c.dim == 0:
        return QRat(1)
    for e in c.rays:
        if evaluate(omega, e) >= 0:
            raise NonNegativeWeight(f"omega{e} = {evaluate(omega, e)} is not negative")
    total = QRat(0)
    for cell in interior_partition(c):
        total = total + _simplicial_sum(cell, omega, scale)
    return total


def lattice_sum(d: HorosphericalDatum, omega: OmegaFunction = None) -> QRat:
    """Sum of q^omega(n) over the lattice points of the support, cone by cone."""
    omega = compute_omega(d) if omega is None else omega
    total = QRat(0)
    for colored in d.cones:
        total = total + cone_interior_sum(colored.cone, omega.covector_for(d, colored.cone),
                                          omega.gorenstein_index)
    logger.debug("lattice sum over %d cones: %s", len(d.cones), total)
    return total
