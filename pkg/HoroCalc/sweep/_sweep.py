import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product
from typing import List, Tuple
from tqdm import tqdm
from ..base import BaseHoro
from ..checks import check_smooth
from ..fan import ColoredFan, HorosphericalDatum
from ..roots import RootSystem, SimpleType, a_alpha, exponents, is_minuscule, simple_types
from ..stringy import euler, stringy_euler

logger = logging.getLogger(__name__)


@dataclass
class TableRow:
    """
    One maximal parabolic of one simple type.

    Attributes:
        type (str): The simple type, e.g. 'E6'.
        alpha (int): The node alpha, with I = S minus {alpha}.
        a_alpha (int): The color weight.
        bound (int): Largest exponent plus one.
        minuscule (bool): Whether varpi_alpha is minuscule.
        holds (bool): 2 <= a_alpha <= bound, with equality exactly for minuscule weights.
    """

    type: str
    alpha: int
    a_alpha: int
    bound: int
    minuscule: bool
    holds: bool


@dataclass
class LadderRow:
    """
    One simple locally factorial datum of the smoothness ladder.

    Attributes:
        type (str): The simple type.
        I (tuple of int): The parabolic subset.
        F (tuple of int): The colors of the cone.
        stringy_euler (Fraction): e_st.
        euler (int): e.
        pattern (bool): Whether the Dynkin pattern says smooth.
        agree (bool): Whether (e_st == e) matches the pattern verdict.
    """

    type: str
    I: Tuple[int, ...]
    F: Tuple[int, ...]
    stringy_euler: Fraction
    euler: int
    pattern: bool
    agree: bool

    def to_dict(self):
        out = asdict(self)
        out.update(I=list(self.I), F=list(self.F), stringy_euler=str(self.stringy_euler))
        return out


def sweep_datum(t: SimpleType, I, F) -> HorosphericalDatum:
    """
    The simple datum with M spanned by the varpi_alpha, alpha not in I, and the
    cone spanned by the standard basis of N, colored by F.
    """
    rs = RootSystem.of(t)
    I = frozenset(I)
    free = sorted(rs.nodes - I)
    basis = tuple(tuple(int(b == a) for b in sorted(rs.nodes)) for a in free)
    r = len(free)
    rays = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    fan = ColoredFan.build(r, rays, [(list(range(r)), sorted(F))])
    return HorosphericalDatum(rs, I, fan, weight_basis=basis)


def _ladder_cases(t: SimpleType):
    nodes = range(1, t.rank + 1)
    for labels in product("IF", repeat=t.rank):
        yield (tuple(a for a, x in zip(nodes, labels) if x == "I"),
               tuple(a for a, x in zip(nodes, labels) if x == "F"))
    # toroidal: no color, I a proper subset
    for labels in product("I-", repeat=t.rank):
        I = tuple(a for a, x in zip(nodes, labels) if x == "I")
        if len(I) < t.rank:
            yield I, ()


class TableSweep(BaseHoro):
    """
    Color weights of all maximal parabolics against the minuscule bound.

    Args:
        **kwargs: Overrides of the sweep configuration (table_max_rank, progress).
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def rows(self) -> List[TableRow]:
        out = []
        types = simple_types(self.cfg.sweep.table_max_rank)
        for t in tqdm(types, desc="minuscule table", disable=not self.cfg.sweep.progress):
            rs = RootSystem.of(t)
            bound = max(exponents(t)) + 1
            for alpha in range(1, t.rank + 1):
                a = a_alpha(rs, rs.nodes - {alpha}, alpha)
                minuscule = is_minuscule(rs, alpha)
                holds = 2 <= a <= bound and (a == bound) == minuscule
                if not holds:
                    logger.warning("%s node %d: a_alpha = %d, bound %d, minuscule %s", t, alpha, a, bound, minuscule)
                out.append(TableRow(str(t), alpha, a, bound, minuscule, holds))
        return out


class LadderSweep(BaseHoro):
    """
    Compare e_st = e against the Dynkin pattern on every simple locally factorial
    full rank datum of the connected types up to the configured rank.

    Args:
        **kwargs: Overrides of the sweep configuration (max_rank, progress).
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def row(self, t: SimpleType, I, F) -> LadderRow:
        d = sweep_datum(t, I, F)
        e_st = stringy_euler(d, cross_check=self.cfg.check.cross_check)
        e = euler(d, cross_check=self.cfg.check.cross_check)
        pattern = check_smooth(d).holds
        return LadderRow(str(t), tuple(I), tuple(F), e_st, e, pattern, (e_st == e) == pattern)

    def rows(self) -> List[LadderRow]:
        cases = [(t, I, F) for t in simple_types(self.cfg.sweep.max_rank) for I, F in _ladder_cases(t)]
        out = []
        for t, I, F in tqdm(cases, desc="smoothness ladder", disable=not self.cfg.sweep.progress):
            row = self.row(t, I, F)
            if not row.agree:
                logger.warning("ladder mismatch on %s I=%s F=%s: e_st=%s e=%s pattern=%s",
                               t, I, F, row.stringy_euler, row.euler, row.pattern)
            out.append(row)
        return out


def minuscule_table(max_rank: int = 8, progress: bool = False) -> List[TableRow]:
    return TableSweep(table_max_rank=max_rank, progress=progress).rows()


def smoothness_ladder(max_rank: int = 5, progress: bool = False) -> List[LadderRow]:
    return LadderSweep(max_rank=max_rank, progress=progress).rows()
