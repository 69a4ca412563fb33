import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Sequence, Tuple
from ..fan import Cone, HorosphericalDatum, carried_by, dot
from ..roots import a_alpha
from ..zlinalg import saturated_basis, solve_rational, is_solvable
from ..errors import Inconsistent, NotQGorenstein

logger = logging.getLogger(__name__)

Covector = Tuple[Fraction, ...]


def evaluate(covector: Sequence[Fraction], n: Sequence[int]) -> Fraction:
    return sum((Fraction(m) * x for m, x in zip(covector, n)), Fraction(0))


@dataclass(frozen=True)
class OmegaFunction:
    """
    The piecewise linear canonical function, one covector per maximal cone.

    Attributes:
        covectors (tuple): Rational covectors m_sigma, in the order of the maximal cones.
        gorenstein_index (int): Least m with m * omega integral on every maximal cone.
    """

    covectors: Tuple[Covector, ...]
    gorenstein_index: int

    def covector_for(self, d: HorosphericalDatum, cone: Cone) -> Covector:
        return self.covectors[d.owner(cone)]

    def value(self, d: HorosphericalDatum, cone: Cone, n: Sequence[int]) -> Fraction:
        return evaluate(self.covector_for(d, cone), n)

    def ray_weights(self, d: HorosphericalDatum) -> Dict[Tuple[int, ...], Fraction]:
        """a_i = -omega(e_i) for every ray of the fan."""
        out = {}
        for cone, cov in zip((c.cone for c in d.fan.maximal_cones), self.covectors):
            for e in cone.rays:
                out.setdefault(e, -evaluate(cov, e))
        return out


def color_weights(d: HorosphericalDatum) -> Dict[int, int]:
    """a_alpha for every color occurring in the fan."""
    used = set()
    for colored in d.fan.maximal_cones:
        used |= colored.colors
    return {alpha: a_alpha(d.rs, d.I, alpha) for alpha in sorted(used)}


def _constraints(d: HorosphericalDatum, colored, weights):
    rows, rhs, labels = [], [], []
    for e in colored.cone.rays:
        if not carried_by(d, colored.colors, e):
            rows.append(e)
            rhs.append(-1)
            labels.append(f"omega{e} = -1")
    for alpha in sorted(colored.colors):
        rows.append(d.rho(alpha))
        rhs.append(-weights[alpha])
        labels.append(f"omega(rho_{alpha} = {d.rho(alpha)}) = -{weights[alpha]}")
    return rows, rhs, labels


def _witness(rows, rhs, labels) -> str:
    for k in range(1, len(rows) + 1):
        if not is_solvable(rows[:k], rhs[:k]):
            return f"{labels[k - 1]} contradicts " + ", ".join(labels[:k - 1])
    return "; ".join(labels)


def _index(d: HorosphericalDatum, cone: Cone, covector: Covector) -> int:
    m = 1
    for b in saturated_basis(cone.rays, d.rank):
        m = math.lcm(m, evaluate(covector, b).denominator)
    return m


def compute_omega(d: HorosphericalDatum) -> OmegaFunction:
    """
    Solve for the canonical function cone by cone.

    On each maximal cone the covector takes the value -1 on rays carrying no
    color and -a_alpha on rho_alpha for each color alpha. Covectors of two
    cones must agree on the rays they share.

    Raises:
        NotQGorenstein: With the offending cone and a witness of the clash.
    """
    weights = color_weights(d)
    covectors = []
    for i, colored in enumerate(d.fan.maximal_cones):
        rows, rhs, labels = _constraints(d, colored, weights)
        if d.rank == 0:
            covectors.append(())
            continue
        try:
            covector = solve_rational(rows, rhs) if rows else tuple(Fraction(0) for _ in range(d.rank))
        except Inconsistent:
            raise NotQGorenstein(f"no linear canonical function on cone {i}",
                                 cone=i, witness=_witness(rows, rhs, labels))
        logger.debug("omega on cone %d: %s", i, covector)
        covectors.append(covector)

    cones = [c.cone for c in d.fan.maximal_cones]
    for i, j in combinations(range(len(cones)), 2):
        for e in set(cones[i].rays) & set(cones[j].rays):
            vi, vj = evaluate(covectors[i], e), evaluate(covectors[j], e)
            if vi != vj:
                raise NotQGorenstein(f"cones {i} and {j} disagree on their common ray {e}",
                                     cone=(i, j), witness=f"omega{e} = {vi} on cone {i} but {vj} on cone {j}")

    index = 1
    for cone, covector in zip(cones, covectors):
        index = math.lcm(index, _index(d, cone, covector))
    return OmegaFunction(tuple(covectors), index)


def gorenstein_index(d: HorosphericalDatum) -> int:
    return compute_omega(d).gorenstein_index
