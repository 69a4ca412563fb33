import logging
from typing import List
from ._cone import Cone, dot
from ..zlinalg import rank

logger = logging.getLogger(__name__)


def _placing(c: Cone) -> List[tuple]:
    simplices = []
    placed = []
    for i, e in enumerate(c.rays):
        if not placed:
            simplices = [(i,)]
        elif rank([c.rays[j] for j in placed] + [e]) > len(simplices[0]):
            # e leaves the current span: cone over every simplex
            simplices = [s + (i,) for s in simplices]
        else:
            current = Cone(tuple(c.rays[j] for j in placed), c.ambient)
            width = len(simplices[0])
            boundary = set()
            for facet in current.facets:
                if dot(facet.normal, e) >= 0:
                    continue
                on_facet = {placed[k] for k in facet.rays}
                for s in simplices:
                    face = tuple(j for j in s if j in on_facet)
                    if len(face) == width - 1:
                        boundary.add(face)
            simplices = simplices + [face + (i,) for face in sorted(boundary)]
        placed.append(i)
    return simplices


def triangulate(c: Cone) -> List[Cone]:
    """
    Placing triangulation of a strictly convex cone using only its own rays.

    Rays are placed in input order; a ray inside the current span is joined to
    every boundary simplex on a facet it can see.

    Returns:
        list of Cone: Simplicial cones covering c and meeting in common faces.
    """
    if c.dim == 0 or c.is_simplicial:
        return [c]
    cells = [c.face(s) for s in _placing(c)]
    logger.debug("triangulated %d rays into %d simplicial cones", len(c.rays), len(cells))
    return cells


def interior_partition(c: Cone) -> List[Cone]:
    """
    Simplicial cones whose relative interiors partition the relative interior of c.

    These are the faces of the triangulation cells that do not lie in a facet
    of c. For a simplicial cone this is [c]; for the zero cone, [zero cone].
    """
    if c.dim == 0 or c.is_simplicial:
        return [c]
    seen = set()
    for cell in _placing(c):
        cell = tuple(sorted(cell))
        cell_cone = c.face(cell)
        for sub in cell_cone.face_sets:
            seen.add(frozenset(cell[k] for k in sub))
    interior = [s for s in seen if not any(s <= facet.rays for facet in c.facets)]
    return [c.face(s) for s in sorted(interior, key=lambda s: (len(s), sorted(s)))]
