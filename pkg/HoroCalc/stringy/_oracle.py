import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple
import numpy as np
from ._omega import OmegaFunction, compute_omega, evaluate
from ._sums import lattice_sum
from ..base import BaseHoro
from ..fan import HorosphericalDatum
from ..errors import InternalError, NonNegativeWeight

logger = logging.getLogger(__name__)

Tally = List[Tuple[Fraction, int]]


def _box(cone, covector, bound) -> np.ndarray:
    weights = [-evaluate(covector, e) for e in cone.rays]
    if any(w <= 0 for w in weights):
        raise NonNegativeWeight(f"omega is not negative on the rays of {list(cone.rays)}")
    limits = []
    for j in range(cone.ambient):
        reach = sum((Fraction(bound) / w * abs(e[j]) for w, e in zip(weights, cone.rays)), Fraction(0))
        limits.append(math.floor(reach))
    axes = [np.arange(-L, L + 1, dtype=np.int64) for L in limits]
    grid = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, cone.ambient)
    logger.debug("oracle box %s: %d candidates", limits, len(grid))
    return grid


def series_oracle(d: HorosphericalDatum, bound, omega: OmegaFunction = None) -> Tally:
    """
    Brute-force tally of q^omega(n) over the lattice points of the support.

    Every maximal cone is scanned over a box large enough to hold all its
    lattice points with omega(n) >= -bound; points are kept by the facet and
    span tests and counted once.

    Returns:
        list of (omega value, number of lattice points), values descending.
    """
    omega = compute_omega(d) if omega is None else omega
    if d.rank == 0:
        return [(Fraction(0), 1)]
    values: Dict[tuple, Fraction] = {}
    for colored, covector in zip(d.fan.maximal_cones, omega.covectors):
        cone = colored.cone
        if cone.dim == 0:
            values.setdefault((0,) * d.rank, Fraction(0))
            continue
        grid = _box(cone, covector, bound)
        mask = np.ones(len(grid), dtype=bool)
        for eq in cone.equations:
            mask &= grid @ np.array(eq, dtype=np.int64) == 0
        for facet in cone.facets:
            mask &= grid @ np.array(facet.normal, dtype=np.int64) >= 0
        inside = np.unique(grid[mask], axis=0)

        den = 1
        for m in covector:
            den = math.lcm(den, Fraction(m).denominator)
        scaled = np.array([int(Fraction(m) * den) for m in covector], dtype=np.int64)
        omega_values = inside @ scaled
        keep = omega_values >= -math.floor(Fraction(bound) * den)
        for point, value in zip(inside[keep], omega_values[keep]):
            key = tuple(int(x) for x in point)
            value = Fraction(int(value), den)
            if values.setdefault(key, value) != value:
                raise InternalError(f"omega is discontinuous at {key}")
    tally = Counter(values.values())
    return sorted(tally.items(), reverse=True)


@dataclass
class OracleComparison:
    """
    Series oracle against the closed-form lattice sum.

    Attributes:
        bound (int): Truncation bound B.
        expected (list): Terms of the expanded closed form, exponent >= -B.
        observed (list): Tally of the brute-force scan.
        mismatches (list): Exponents where the two disagree.
    """

    bound: int
    expected: Tally
    observed: Tally
    mismatches: List[Fraction] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self):
        def terms(tally):
            return [[str(e), str(c)] for e, c in tally]
        return {"bound": self.bound, "passed": self.passed,
                "expected": terms(self.expected), "observed": terms(self.observed),
                "mismatches": [str(e) for e in self.mismatches]}


class SeriesOracle(BaseHoro):
    """
    Compare the generating function of the support against a box scan.

    Args:
        **kwargs: Overrides of the oracle configuration (bound, bound_factor).
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def default_bound(self, d: HorosphericalDatum, omega: OmegaFunction) -> int:
        weights = omega.ray_weights(d).values()
        return self.cfg.oracle.bound_factor * max((math.ceil(a) for a in weights), default=1)

    def compare(self, d: HorosphericalDatum) -> OracleComparison:
        omega = compute_omega(d)
        bound = self.cfg.oracle.bound
        if bound is None:
            bound = self.default_bound(d, omega)
        expected = lattice_sum(d, omega).series_expand(bound)
        observed = series_oracle(d, bound, omega)
        want, got = dict(expected), dict(observed)
        mismatches = sorted((e for e in set(want) | set(got) if want.get(e, 0) != got.get(e, 0)), reverse=True)
        if mismatches:
            logger.warning("oracle mismatch at exponents %s", [str(e) for e in mismatches])
        return OracleComparison(bound, expected, observed, mismatches)


def compare_oracle(d: HorosphericalDatum, bound: int = None) -> OracleComparison:
    return SeriesOracle(bound=bound).compare(d)
