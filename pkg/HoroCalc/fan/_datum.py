from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple
from ._cone import Cone, Vector
from ..roots import RootSystem, positive_roots
from ..errors import InvalidColor


@dataclass(frozen=True)
class ColoredCone:
    """
    A cone together with its set of colors.

    Attributes:
        cone (Cone): The underlying cone.
        colors (frozenset of int): Nodes alpha of S minus I carried by the cone.
    """

    cone: Cone
    colors: FrozenSet[int] = frozenset()

    @property
    def dim(self) -> int:
        return self.cone.dim

    def __str__(self):
        colors = ",".join(str(a) for a in sorted(self.colors))
        return f"cone{list(self.cone.rays)}{{{colors}}}"


@dataclass(frozen=True)
class ColoredFan:
    """
    Colored fan given by its maximal colored cones.

    Attributes:
        rank (int): Rank r of the lattice N.
        rays (tuple of vectors): Ray list the maximal cones draw from.
        maximal_cones (tuple of ColoredCone): The listed maximal cones.
    """

    rank: int
    rays: Tuple[Vector, ...]
    maximal_cones: Tuple[ColoredCone, ...]

    @classmethod
    def build(cls, rank: int, rays, cones) -> "ColoredFan":
        """
        Build from a ray list and (ray indices, colors) pairs.

        Example Usage:
            >>> ColoredFan.build(2, [(1, 0), (0, 1)], [([0, 1], [1, 2])])
        """
        rays = tuple(tuple(int(x) for x in v) for v in rays)
        maximal = tuple(
            ColoredCone(Cone(tuple(rays[i] for i in idx), rank), frozenset(int(a) for a in colors))
            for idx, colors in cones)
        return cls(rank, rays, maximal)

    def uncolored(self) -> "ColoredFan":
        return replace(self, maximal_cones=tuple(ColoredCone(c.cone) for c in self.maximal_cones))

    def ray_indices(self, cone: Cone) -> List[int]:
        index = {v: i for i, v in enumerate(self.rays)}
        return [index[v] for v in cone.rays]


@dataclass(frozen=True)
class HorosphericalDatum:
    """
    The combinatorial data of a horospherical embedding.

    Exactly one of ``weight_basis`` and ``explicit_rho`` is set.

    Attributes:
        rs (RootSystem): Root system of G.
        I (frozenset of int): The parabolic subset.
        fan (ColoredFan): The colored fan.
        weight_basis (tuple of rows): r x |S| matrix, rows are a basis of M in
            fundamental weight coordinates.
        explicit_rho (tuple of pairs): Sorted (node, vector) pairs giving rho directly.
    """

    rs: RootSystem
    I: FrozenSet[int]
    fan: ColoredFan
    weight_basis: Optional[Tuple[Tuple[int, ...], ...]] = None
    explicit_rho: Optional[Tuple[Tuple[int, Vector], ...]] = None

    @property
    def rank(self) -> int:
        return self.fan.rank

    @property
    def colorable(self) -> FrozenSet[int]:
        return self.rs.nodes - self.I

    @cached_property
    def _rho_table(self) -> Dict[int, Vector]:
        if self.explicit_rho is not None:
            return {a: tuple(v) for a, v in self.explicit_rho}
        basis = self.weight_basis or ()
        return {a: tuple(row[a - 1] for row in basis) if basis else () for a in self.colorable}

    def rho(self, alpha: int) -> Vector:
        if alpha in self.I:
            raise InvalidColor(f"node {alpha} lies in I = {sorted(self.I)}")
        if alpha not in self._rho_table:
            raise InvalidColor(f"no rho for node {alpha}")
        return self._rho_table[alpha]

    def induced_colors(self, colors, cone: Cone) -> FrozenSet[int]:
        return frozenset(a for a in colors if cone.contains(self.rho(a)))

    @cached_property
    def cones(self) -> Tuple[ColoredCone, ...]:
        """
        Every colored cone of the fan, each face once.

        Colors of a face are induced from the first maximal cone containing it.
        Sorted by dimension, then by the fan's ray indices.
        """
        found = {}
        for colored in self.fan.maximal_cones:
            for face in colored.cone.faces():
                if face.key not in found:
                    found[face.key] = ColoredCone(face, self.induced_colors(colored.colors, face))
        return tuple(sorted(found.values(),
                            key=lambda c: (c.dim, len(c.cone.rays), sorted(self.fan.ray_indices(c.cone)))))

    def owner(self, cone: Cone) -> int:
        """Index of the first maximal cone having ``cone`` as a face."""
        for i, colored in enumerate(self.fan.maximal_cones):
            if colored.cone.is_face(cone):
                return i
        raise ValueError(f"{cone.rays} is not a cone of the fan")

    @property
    def dimension(self) -> int:
        """Dimension of G/H: r + |R+| - |R+_I|."""
        return self.rank + len(positive_roots(self.rs)) - len(positive_roots(self.rs, self.I))


def rho_of_color(d: HorosphericalDatum, alpha: int) -> Vector:
    """
    Image of the color alpha in N: the coroot restricted to M.

    Raises:
        InvalidColor: If alpha lies in I.
    """
    return d.rho(alpha)


def faces(c: ColoredCone, d: HorosphericalDatum) -> List[ColoredCone]:
    """All faces of a colored cone with induced colors, zero face first."""
    return [ColoredCone(face, d.induced_colors(c.colors, face)) for face in c.cone.faces()]


def decolorize(d: HorosphericalDatum) -> HorosphericalDatum:
    """Same fan with every color removed."""
    return replace(d, fan=d.fan.uncolored())
