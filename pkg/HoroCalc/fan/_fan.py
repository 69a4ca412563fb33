import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple
from ._cone import Cone, intersection_generators
from ._datum import ColoredCone, ColoredFan, HorosphericalDatum
from ..roots import positive_roots
from ..zlinalg import rank
from ..errors import InvalidColor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """
    A failed fan or lattice axiom.

    Attributes:
        code (str): Machine-readable code, e.g. 'StrictConvexity'.
        message (str): Human readable description.
        cone (int): Index of the maximal cone concerned, when there is one.
    """

    code: str
    message: str
    cone: Optional[int] = None

    def to_dict(self):
        return {"code": self.code, "message": self.message, "cone": self.cone}


def _lattice_violations(d: HorosphericalDatum) -> List[Violation]:
    out = []
    if d.weight_basis is not None:
        basis = [list(row) for row in d.weight_basis]
        if any(len(row) != d.rs.size for row in basis):
            out.append(Violation("DimensionMismatch", f"rows of M must have length {d.rs.size}"))
            return out
        if len(basis) != d.rank or (basis and rank(basis) < len(basis)):
            out.append(Violation("LatticeRankDeficient", f"M must have {d.rank} independent rows"))
        for j, row in enumerate(basis):
            for alpha in sorted(d.I):
                if row[alpha - 1] != 0:
                    out.append(Violation("LatticeNotOrthogonal",
                                         f"<m_{j + 1}, coroot {alpha}> = {row[alpha - 1]} but {alpha} is in I"))
    else:
        for alpha, v in d.explicit_rho:
            if alpha in d.I:
                out.append(Violation("InvalidColor", f"rho given for node {alpha} of I"))
            if len(v) != d.rank:
                out.append(Violation("DimensionMismatch", f"rho of node {alpha} has length {len(v)}"))
    return out


def _cone_violations(i: int, colored: ColoredCone, d: HorosphericalDatum) -> List[Violation]:
    cone = colored.cone
    out = []
    for e in cone.rays:
        if len(e) != d.rank:
            return [Violation("DimensionMismatch", f"ray {e} does not lie in Z^{d.rank}", i)]
        g = math.gcd(*e) if e else 0
        if g == 0:
            out.append(Violation("ZeroRay", "the zero vector is not a ray", i))
        elif g != 1:
            out.append(Violation("NonPrimitiveRay", f"ray {e} is not primitive", i))
    for a, b in combinations(cone.rays, 2):
        if rank([a, b]) < 2:
            out.append(Violation("ProportionalRays", f"rays {a} and {b} are proportional", i))
    if out:
        return out
    if not cone.is_strictly_convex:
        return [Violation("StrictConvexity", f"cone {list(cone.rays)} contains a line", i)]
    for k in cone.redundant_rays():
        out.append(Violation("RedundantRay", f"ray {cone.rays[k]} is not extreme", i))
    for alpha in sorted(colored.colors):
        if alpha in d.I:
            out.append(Violation("InvalidColor", f"color {alpha} lies in I", i))
            continue
        if alpha not in d.rs.nodes:
            out.append(Violation("UnknownColor", f"color {alpha} is not a node", i))
            continue
        try:
            rho = d.rho(alpha)
        except InvalidColor as exc:
            out.append(Violation("UnknownColor", str(exc), i))
            continue
        if not any(rho):
            out.append(Violation("ZeroRho", f"rho of color {alpha} is zero", i))
        elif not cone.contains(rho):
            out.append(Violation("RhoNotInCone", f"rho of color {alpha} = {rho} is not in the cone", i))
    return out


def _pair_violations(i: int, j: int, a: ColoredCone, b: ColoredCone, d: HorosphericalDatum):
    common = Cone(tuple(e for e in a.cone.rays if e in set(b.cone.rays)), d.rank)
    where = f"cones {i} and {j}"
    if not (a.cone.is_face(common) and b.cone.is_face(common)):
        return [Violation("FaceIntersection", f"{where}: common rays do not span a common face", i)]
    for g in intersection_generators(a.cone, b.cone):
        if not common.contains(g):
            return [Violation("FaceIntersection", f"{where} overlap beyond their common face at {g}", i)]
    if d.induced_colors(a.colors, common) != d.induced_colors(b.colors, common):
        return [Violation("FaceColors", f"{where} induce different colors on their common face", i)]
    return []


def validate_fan(d: HorosphericalDatum) -> List[Violation]:
    """
    Check the lattice and colored fan axioms.

    Returns:
        list of Violation: Empty when the datum is valid.
    """
    out = _lattice_violations(d)
    if out:
        return out
    sound = []
    for i, colored in enumerate(d.fan.maximal_cones):
        found = _cone_violations(i, colored, d)
        out.extend(found)
        if not found:
            sound.append(i)
    cones = d.fan.maximal_cones
    for i, j in combinations(sound, 2):
        out.extend(_pair_violations(i, j, cones[i], cones[j], d))
    for v in out:
        logger.info("violation %s: %s", v.code, v.message)
    return out


@dataclass(frozen=True)
class OrbitInfo:
    """
    One G-orbit of the embedding.

    Attributes:
        index (int): Position in the orbit list.
        colored_cone (ColoredCone): The colored cone of the orbit.
        dim (int): Orbit dimension, rank_part + flag_part.
        rank_part (int): r - dim of the cone.
        flag_part (int): dim G/P_{I u F}.
        closure (tuple of int): Indices of the orbits in the closure, itself included.
    """

    index: int
    colored_cone: ColoredCone
    dim: int
    rank_part: int
    flag_part: int
    closure: Tuple[int, ...]


def orbits(d: HorosphericalDatum) -> List[OrbitInfo]:
    """One orbit per colored cone; the zero cone gives the open orbit."""
    cones = d.cones
    total = len(positive_roots(d.rs))
    out = []
    for i, colored in enumerate(cones):
        flag_part = total - len(positive_roots(d.rs, d.I | colored.colors))
        rank_part = d.rank - colored.dim
        closure = tuple(j for j, other in enumerate(cones) if other.cone.is_face(colored.cone))
        out.append(OrbitInfo(i, colored, rank_part + flag_part, rank_part, flag_part, closure))
    return out


def is_complete(f: ColoredFan) -> bool:
    """
    Whether the support of the fan is all of N_R.

    Decided combinatorially: every maximal cone is full dimensional, every facet
    is shared by exactly two maximal cones and the cones are facet connected.
    """
    cones = [c.cone for c in f.maximal_cones]
    if f.rank == 0:
        return True
    if not cones or any(c.dim != f.rank for c in cones):
        return False
    owners = {}
    for i, c in enumerate(cones):
        for facet in c.facets:
            key = frozenset(c.rays[k] for k in facet.rays)
            owners.setdefault(key, []).append(i)
    if any(len(v) != 2 for v in owners.values()):
        return False
    reached, stack = {0}, [0]
    while stack:
        i = stack.pop()
        for pair in owners.values():
            if i in pair:
                for j in pair:
                    if j not in reached:
                        reached.add(j)
                        stack.append(j)
    return len(reached) == len(cones)
