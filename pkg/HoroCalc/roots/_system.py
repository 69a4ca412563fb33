import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, Tuple
from ._cartan import Matrix, SimpleType, cartan_matrix
from ..qfun import QPoly, InexactDivision
from ..errors import InternalError, InvalidColor

NodeSubset = FrozenSet[int]
Root = Tuple[int, ...]


@lru_cache(maxsize=None)
def _positive_roots(cartan: Matrix) -> Tuple[Root, ...]:
    # root-string closure, one height at a time
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    ordered = list(simple)
    layer = simple
    while layer:
        found = set()
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p, gamma = 0, beta
                while True:
                    lower = gamma[:i] + (gamma[i] - 1,) + gamma[i + 1:]
                    if lower not in known:
                        break
                    p, gamma = p + 1, lower
                if p - pairing > 0:
                    higher = beta[:i] + (beta[i] + 1,) + beta[i + 1:]
                    if higher not in known:
                        found.add(higher)
        layer = sorted(found, reverse=True)
        known.update(layer)
        ordered.extend(layer)
    return tuple(ordered)


@lru_cache(maxsize=None)
def _exponents(cartan: Matrix) -> Tuple[int, ...]:
    heights = Counter(sum(root) for root in _positive_roots(cartan))
    out = []
    for k in range(1, max(heights, default=0) + 1):
        out.extend([k] * (heights[k] - heights[k + 1]))
    return tuple(out)


def _submatrix(cartan: Matrix, nodes: Iterable[int]) -> Matrix:
    idx = [a - 1 for a in sorted(nodes)]
    return tuple(tuple(cartan[i][j] for j in idx) for i in idx)


def _q_integer(m: int) -> QPoly:
    return QPoly.from_coefficients([1] * (m + 1))


@dataclass(frozen=True)
class RootSystem:
    """
    Semisimple root system given by an ordered list of connected types.

    Nodes are numbered 1..|S| by concatenating the Bourbaki numbering of the
    components. The empty list is the torus case.

    Attributes:
        components (tuple of SimpleType): The connected components.
    """

    components: Tuple[SimpleType, ...] = ()

    @classmethod
    def of(cls, *types) -> "RootSystem":
        """Build from SimpleTypes or (family, rank) pairs."""
        return cls(tuple(t if isinstance(t, SimpleType) else SimpleType(*t) for t in types))

    @cached_property
    def cartan(self) -> Matrix:
        n = self.size
        C = [[0] * n for _ in range(n)]
        offset = 0
        for t in self.components:
            block = cartan_matrix(t)
            for i, row in enumerate(block):
                for j, x in enumerate(row):
                    C[offset + i][offset + j] = x
            offset += t.rank
        return tuple(tuple(row) for row in C)

    @property
    def size(self) -> int:
        return sum(t.rank for t in self.components)

    @property
    def nodes(self) -> NodeSubset:
        return frozenset(range(1, self.size + 1))

    def subset(self, nodes: Iterable[int]) -> NodeSubset:
        sub = frozenset(int(a) for a in nodes)
        if not sub <= self.nodes:
            raise ValueError(f"nodes {sorted(sub - self.nodes)} are not in {self}")
        return sub

    def sub_cartan(self, sub: Iterable[int]) -> Matrix:
        return _submatrix(self.cartan, self.subset(sub))

    @cached_property
    def positive_roots(self) -> Tuple[Root, ...]:
        return _positive_roots(self.cartan)

    def __str__(self):
        return "x".join(str(t) for t in self.components) or "T"


def positive_roots(rs: RootSystem, sub: Iterable[int] = None) -> List[Root]:
    """
    Positive roots in simple-root coordinates, by increasing height.

    With ``sub`` given, the positive roots of the sub-system spanned by those
    nodes, written in the coordinates of the whole system.
    """
    if sub is None:
        return list(rs.positive_roots)
    nodes = sorted(rs.subset(sub))
    out = []
    for root in _positive_roots(rs.sub_cartan(nodes)):
        full = [0] * rs.size
        for a, c in zip(nodes, root):
            full[a - 1] = c
        out.append(tuple(full))
    return out


def exponents(t) -> List[int]:
    """Exponents of a connected type (or of a whole RootSystem), ascending."""
    if isinstance(t, SimpleType):
        return list(_exponents(cartan_matrix(t)))
    return sorted(_exponents(t.cartan))


def sub_exponents(rs: RootSystem, sub: Iterable[int]) -> List[int]:
    return sorted(_exponents(rs.sub_cartan(sub)))


def components(rs: RootSystem, sub: Iterable[int]) -> List[NodeSubset]:
    """Connected components of the Dynkin subgraph induced on ``sub``, sorted by least node."""
    remaining = set(rs.subset(sub))
    C = rs.cartan
    out = []
    while remaining:
        start = min(remaining)
        seen, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for b in list(remaining):
                if b not in seen and C[a - 1][b - 1] < 0:
                    seen.add(b)
                    stack.append(b)
        remaining -= seen
        out.append(frozenset(seen))
    return out


def weyl_order(rs: RootSystem, sub: Iterable[int] = None) -> int:
    """|W_sub| as the product of (m_i + 1) over the exponents of the sub-diagram."""
    sub = rs.nodes if sub is None else sub
    return math.prod(m + 1 for m in sub_exponents(rs, sub))


def weyl_poincare(rs: RootSystem, sub: Iterable[int] = None) -> QPoly:
    sub = rs.nodes if sub is None else sub
    result = QPoly.one()
    for m in sub_exponents(rs, sub):
        result = result * _q_integer(m)
    return result


def coset_poincare(rs: RootSystem, I: Iterable[int]) -> QPoly:
    """
    Poincare polynomial W(t) / W_I(t) of W / W_I.

    Raises:
        InternalError: If the division leaves a remainder.
    """
    try:
        return weyl_poincare(rs).divide_exact(weyl_poincare(rs, I))
    except InexactDivision as exc:
        raise InternalError(f"W_I(t) does not divide W(t) for I = {sorted(I)}") from exc


def pairing(rs: RootSystem, root: Root, alpha: int) -> int:
    """<root, alpha^vee> for a root in simple-root coordinates."""
    row = rs.cartan[alpha - 1]
    return sum(c * x for c, x in zip(root, row))


def a_alpha(rs: RootSystem, I: Iterable[int], alpha: int) -> int:
    """
    The color weight a_alpha = 2 - sum over positive roots gamma of I of <gamma, alpha^vee>.

    Raises:
        InvalidColor: If alpha lies in I.
    """
    I = rs.subset(I)
    if alpha in I:
        raise InvalidColor(f"node {alpha} lies in I = {sorted(I)}")
    if alpha not in rs.nodes:
        raise InvalidColor(f"node {alpha} is not a node of {rs}")
    return 2 - sum(pairing(rs, gamma, alpha) for gamma in positive_roots(rs, I))


def component_of(rs: RootSystem, alpha: int) -> NodeSubset:
    for comp in components(rs, rs.nodes):
        if alpha in comp:
            return comp
    raise InvalidColor(f"node {alpha} is not a node of {rs}")


def highest_root(rs: RootSystem, alpha: int, dual: bool = False) -> Root:
    """Highest root of the component containing alpha (of the dual system when ``dual``)."""
    comp = sorted(component_of(rs, alpha))
    cartan = rs.sub_cartan(comp)
    if dual:
        cartan = tuple(zip(*cartan))
    top = _positive_roots(cartan)[-1]
    full = [0] * rs.size
    for a, c in zip(comp, top):
        full[a - 1] = c
    return tuple(full)


def is_minuscule(rs: RootSystem, alpha: int) -> bool:
    """Whether <varpi_alpha, theta> = 1 for the highest root theta of the dual system."""
    return highest_root(rs, alpha, dual=True)[alpha - 1] == 1


def dynkin_shape(rs: RootSystem, comp: Iterable[int]):
    """
    Classify a connected sub-diagram.

    Returns:
        (str, tuple): ('A', path) for a simply laced path; ('C', path) for a path
        whose only double edge is its last edge, with the long root at the end of
        the path (so path[0] plays the role of beta_1 in type C); ('other', ())
        otherwise.
    """
    comp = sorted(rs.subset(comp))
    C = rs.cartan
    if len(comp) == 1:
        return 'A', tuple(comp)
    adj = {a: [b for b in comp if b != a and C[a - 1][b - 1] < 0] for a in comp}
    n_edges = sum(len(v) for v in adj.values()) // 2
    if n_edges != len(comp) - 1 or any(len(v) > 2 for v in adj.values()):
        return 'other', ()

    def walk(start):
        path, prev = [start], None
        while True:
            nxt = [b for b in adj[path[-1]] if b != prev]
            if not nxt:
                return tuple(path)
            prev = path[-1]
            path.append(nxt[0])

    ends = [a for a in comp if len(adj[a]) == 1]
    laces = {(a, b): C[a - 1][b - 1] * C[b - 1][a - 1] for a in comp for b in adj[a]}
    if all(m == 1 for m in laces.values()):
        return 'A', walk(min(ends))
    if sorted(laces.values()).count(2) != 2 or any(m > 2 for m in laces.values()):
        return 'other', ()
    for start in sorted(ends):
        path = walk(start)
        end, before = path[-1], path[-2]
        if laces[(before, end)] == 2 and C[before - 1][end - 1] == -2:
            return 'C', path
    return 'other', ()
