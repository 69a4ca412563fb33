import logging
import cdd
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, List, Sequence, Tuple
from ..zlinalg import integral, orthogonal_complement, rank, rat_matrix, as_fraction, solve_rational

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _independent(vectors: Sequence[Sequence], limit: int = None) -> List[int]:
    """Indices of a greedy maximal independent subset, scanning in order."""
    chosen = []
    for idx, v in enumerate(vectors):
        if rank([vectors[i] for i in chosen] + [v]) > len(chosen):
            chosen.append(idx)
            if limit is not None and len(chosen) == limit:
                break
    return chosen


def cone_generators(constraints: Sequence[Sequence[int]], dim: int) -> List[Vector]:
    """
    Extreme rays of {u in Q^dim : c.u >= 0 for every constraint c}.

    The H-representation goes to cdd in exact fraction arithmetic. Its
    V-representation lists rays (leading 0) and the apex (leading 1); the apex
    is dropped and every ray is scaled to a primitive integer vector.

    The constraints must have rank ``dim`` (the cone is then pointed).
    """
    constraints = [tuple(int(x) for x in c) for c in constraints]
    if len(_independent(constraints, dim)) < dim:
        raise ValueError("constraints do not have full rank")
    mat = cdd.Matrix([[0] + list(c) for c in constraints], number_type='fraction')
    mat.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(mat).get_generators()
    rays = []
    for i in range(generators.row_size):
        row = generators[i]
        if row[0] != 0 or not any(row[1:]):
            continue
        u = integral([Fraction(x) for x in row[1:]])
        if u not in rays:
            rays.append(u)
    logger.debug("%d constraints in dimension %d: %d extreme rays", len(constraints), dim, len(rays))
    return rays


@dataclass(frozen=True)
class Facet:
    """
    A facet of a cone.

    Attributes:
        normal (tuple of int): Primitive inner normal inside the span of the cone.
        rays (frozenset of int): Indices of the cone's rays lying on the facet.
    """

    normal: Vector
    rays: FrozenSet[int]


@dataclass(frozen=True)
class Cone:
    """
    Rational polyhedral cone in Z^ambient given by its ray generators.

    Attributes:
        rays (tuple of tuple of int): Ray generators, in input order.
        ambient (int): Rank of the lattice N.
    """

    rays: Tuple[Vector, ...]
    ambient: int

    @classmethod
    def of(cls, rays: Sequence[Sequence[int]], ambient: int = None) -> "Cone":
        rays = tuple(tuple(int(x) for x in v) for v in rays)
        if ambient is None:
            if not rays:
                raise ValueError("the ambient rank of the zero cone must be given")
            ambient = len(rays[0])
        return cls(rays, ambient)

    @classmethod
    def zero(cls, ambient: int) -> "Cone":
        return cls((), ambient)

    @cached_property
    def key(self) -> FrozenSet[Vector]:
        return frozenset(self.rays)

    @cached_property
    def dim(self) -> int:
        return rank(self.rays) if self.rays else 0

    @cached_property
    def equations(self) -> Tuple[Vector, ...]:
        """Integer basis of the annihilator of the span."""
        return tuple(orthogonal_complement(self.rays, self.ambient))

    @cached_property
    def _dual_generators(self) -> Tuple[Vector, ...]:
        # generators of the dual cone, in coordinates of a basis of the span
        if self.dim == 0:
            return ()
        basis = [self.rays[i] for i in _independent(self.rays, self.dim)]
        columns = [[b[i] for b in basis] for i in range(self.ambient)]
        coords = [integral(solve_rational(columns, e)) for e in self.rays]
        return tuple(cone_generators(coords, self.dim))

    @cached_property
    def is_strictly_convex(self) -> bool:
        if self.dim == 0:
            return True
        gens = self._dual_generators
        return bool(gens) and rank(gens) == self.dim

    @cached_property
    def facets(self) -> Tuple[Facet, ...]:
        """Facets with normals in Q^ambient, in the order the dual generators were found."""
        if self.dim == 0:
            return ()
        basis = [self.rays[i] for i in _independent(self.rays, self.dim)]
        gram = rat_matrix([[dot(a, b) for b in basis] for a in basis]).inv().to_list()
        gram = [[as_fraction(x) for x in row] for row in gram]
        out = []
        for u in self._dual_generators:
            w = [sum((gram[k][l] * u[l] for l in range(self.dim)), Fraction(0)) for k in range(self.dim)]
            v = integral([sum(w[k] * basis[k][i] for k in range(self.dim)) for i in range(self.ambient)])
            tight = frozenset(i for i, e in enumerate(self.rays) if dot(v, e) == 0)
            out.append(Facet(v, tight))
        logger.debug("cone %s: %d facets", self.rays, len(out))
        return tuple(out)

    @cached_property
    def is_simplicial(self) -> bool:
        return self.is_strictly_convex and len(self.rays) == self.dim

    def in_span(self, p: Sequence[int]) -> bool:
        return all(dot(eq, p) == 0 for eq in self.equations)

    def contains(self, p: Sequence[int]) -> bool:
        return self.in_span(p) and all(dot(f.normal, p) >= 0 for f in self.facets)

    def relint_contains(self, p: Sequence[int]) -> bool:
        if self.dim == 0:
            return not any(p)
        return self.in_span(p) and all(dot(f.normal, p) > 0 for f in self.facets)

    @cached_property
    def face_sets(self) -> Tuple[FrozenSet[int], ...]:
        """Ray-index sets of all faces, the zero face first and the cone itself last."""
        full = frozenset(range(len(self.rays)))
        found = {full}
        frontier = [full]
        while frontier:
            current = frontier.pop()
            for facet in self.facets:
                smaller = current & facet.rays
                if smaller not in found:
                    found.add(smaller)
                    frontier.append(smaller)
        return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))

    def face(self, indices) -> "Cone":
        return Cone(tuple(self.rays[i] for i in sorted(indices)), self.ambient)

    def faces(self) -> List["Cone"]:
        return [self.face(s) for s in self.face_sets]

    def is_face(self, other: "Cone") -> bool:
        index = {e: i for i, e in enumerate(self.rays)}
        if not set(other.rays) <= set(index):
            return False
        return frozenset(index[e] for e in other.rays) in self.face_sets

    def redundant_rays(self) -> List[int]:
        """Indices of rays that are not extreme."""
        extreme = {next(iter(s)) for s in self.face_sets if len(s) == 1}
        return [i for i in range(len(self.rays)) if i not in extreme]

    def __len__(self):
        return len(self.rays)


def intersection_generators(a: Cone, b: Cone) -> List[Vector]:
    """Extreme rays of the intersection of two strictly convex cones."""
    constraints = []
    for cone in (a, b):
        for eq in cone.equations:
            constraints.append(eq)
            constraints.append(tuple(-x for x in eq))
        constraints.extend(f.normal for f in cone.facets)
    if a.dim == 0 or b.dim == 0:
        return []
    gens = cone_generators(constraints, a.ambient)
    # the intersection may be {0}
    return [g for g in gens if a.contains(g) and b.contains(g)]
