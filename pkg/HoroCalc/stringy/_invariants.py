import logging
import math
from fractions import Fraction
from typing import Optional, Tuple
from ._omega import OmegaFunction, color_weights, compute_omega
from ._sums import lattice_sum
from ..config import config as cfg
from ..fan import (HorosphericalDatum, is_complete, is_full_rank, is_simple,
                   locally_factorial_diagnostics)
from ..qfun import QPoly, QRat
from ..roots import coset_poincare, weyl_order
from ..errors import InternalError, NotComplete, NotLocallyFactorial

logger = logging.getLogger(__name__)

_q_minus_one = QPoly.from_coefficients([-1, 1])


def e_homogeneous(d: HorosphericalDatum) -> QPoly:
    """E-polynomial of G/H: the Poincare polynomial of W/W_I in q times (q-1)^r."""
    return coset_poincare(d.rs, d.I) * _q_minus_one ** d.rank


def e_polynomial(d: HorosphericalDatum) -> QPoly:
    """Sum over the orbits of the E-polynomial of each orbit."""
    total = QPoly.zero()
    for colored in d.cones:
        total = total + coset_poincare(d.rs, d.I | colored.colors) * _q_minus_one ** (d.rank - colored.dim)
    return total


def stringy_E(d: HorosphericalDatum, omega: OmegaFunction = None) -> QRat:
    """
    Stringy E-function E(G/H) * sum over the support of q^omega(n).

    Raises:
        NotQGorenstein: If the canonical function does not exist.
    """
    return QRat(e_homogeneous(d)) * lattice_sum(d, omega)


def closed_form_applies(d: HorosphericalDatum) -> bool:
    """Simple, locally factorial, full rank data."""
    return is_simple(d) and is_full_rank(d) and not locally_factorial_diagnostics(d)


def closed_form_euler(d: HorosphericalDatum) -> Tuple[Fraction, int]:
    """
    (e_st, e) as |W_S| / (|W_I| prod a_alpha) and |W_S| / |W_{I u F}|.

    Only meaningful for simple locally factorial full rank data.
    """
    colors = d.fan.maximal_cones[0].colors
    weights = color_weights(d)
    order = weyl_order(d.rs)
    e_st = Fraction(order, weyl_order(d.rs, d.I) * math.prod(weights[a] for a in colors))
    return e_st, order // weyl_order(d.rs, d.I | colors)


def stringy_euler(d: HorosphericalDatum, omega: OmegaFunction = None, cross_check: bool = None) -> Fraction:
    """
    Stringy Euler number, the value of stringy_E at q = 1.

    Raises:
        PoleAtOne: If stringy_E has a pole at 1.
        InternalError: If the closed form applies and disagrees.
    """
    value = stringy_E(d, omega).eval_at_one()
    cross_check = cfg.check.cross_check if cross_check is None else cross_check
    if cross_check and closed_form_applies(d):
        expected, _ = closed_form_euler(d)
        if expected != value:
            raise InternalError(f"stringy Euler number {value} differs from the closed form {expected}")
    return value


def euler(d: HorosphericalDatum, cross_check: bool = None) -> int:
    value = e_polynomial(d).at_one()
    cross_check = cfg.check.cross_check if cross_check is None else cross_check
    if cross_check and closed_form_applies(d):
        _, expected = closed_form_euler(d)
        if expected != value:
            raise InternalError(f"Euler number {value} differs from the closed form {expected}")
    return value


def _require_complete_factorial(d: HorosphericalDatum) -> None:
    if not is_complete(d.fan):
        raise NotComplete("the fan is not complete")
    failures = locally_factorial_diagnostics(d)
    if failures:
        raise NotLocallyFactorial("the datum is not locally factorial",
                                  cone=failures[0].cone, witness=failures[0].message)


def _ray_weights(d: HorosphericalDatum, omega: OmegaFunction):
    weights = omega.ray_weights(d)
    for e, a in weights.items():
        if a.denominator != 1 or a <= 0:
            raise InternalError(f"ray {e} has weight {a}, expected a positive integer")
    return {e: int(a) for e, a in weights.items()}


def weighted_SR_poincare(d: HorosphericalDatum, omega: OmegaFunction = None) -> QRat:
    """
    Poincare series of the weighted Stanley-Reisner ring, in the variable t.

    Each ray e_i has degree a_i = -omega(e_i); the series is the sum over all
    cones of prod t^a_i / (1 - t^a_i).

    Raises:
        NotComplete: If the fan is not complete.
        NotLocallyFactorial: If the datum is not locally factorial.
    """
    _require_complete_factorial(d)
    omega = compute_omega(d) if omega is None else omega
    weights = _ray_weights(d, omega)
    total = QRat(0)
    for colored in d.cones:
        term = QRat(1)
        for e in colored.cone.rays:
            term = term * QRat(QPoly.monomial(weights[e]), 1 - QPoly.monomial(weights[e]))
        total = total + term
    return total


def stanley_reisner_alternating(d: HorosphericalDatum, omega: OmegaFunction = None) -> QRat:
    """
    The lattice sum written as sum over cones of (-1)^dim / prod (1 - q^a_i).

    Raises:
        NotComplete: If the fan is not complete.
        NotLocallyFactorial: If the datum is not locally factorial.
    """
    _require_complete_factorial(d)
    omega = compute_omega(d) if omega is None else omega
    weights = _ray_weights(d, omega)
    total = QRat(0)
    for colored in d.cones:
        den = QPoly.one()
        for e in colored.cone.rays:
            den = den * (1 - QPoly.monomial(weights[e]))
        total = total + QRat((-1) ** colored.dim, den)
    return total


def stringy_E_from_series(d: HorosphericalDatum, omega: OmegaFunction = None) -> QRat:
    """E(G/H) * (-1)^r * P(R^w, q) for complete locally factorial data."""
    return QRat(e_homogeneous(d)) * (-1) ** d.rank * weighted_SR_poincare(d, omega)


def sr_series(d: HorosphericalDatum, omega: OmegaFunction = None) -> Optional[QRat]:
    """weighted_SR_poincare when its hypotheses hold, else None."""
    try:
        return weighted_SR_poincare(d, omega)
    except (NotComplete, NotLocallyFactorial) as exc:
        logger.info("no Stanley-Reisner series: %s", exc)
        return None
