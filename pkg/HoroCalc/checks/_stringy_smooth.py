import logging
from dataclasses import dataclass
from fractions import Fraction
from ._base import BaseCheck
from ._smooth import SmoothCheck
from ..fan import is_full_rank, is_simple, locally_factorial_diagnostics
from ..stringy import euler, stringy_euler
from ..errors import InternalError, PreconditionFailed

logger = logging.getLogger(__name__)


@dataclass
class StringySmoothness:
    """
    Euler number comparison for simple locally factorial full rank data.

    Attributes:
        stringy_euler (Fraction): e_st.
        euler (int): e.
        equal (bool): Whether e_st = e, i.e. whether the variety is smooth.
    """

    stringy_euler: Fraction
    euler: int
    equal: bool

    def to_dict(self):
        return {"stringy_euler": str(self.stringy_euler), "euler": self.euler, "equal": self.equal}


class StringySmoothCheck(BaseCheck):
    """
    Smoothness read off the Euler numbers: smooth iff e_st = e.
    """

    name = "stringy_smooth"

    def preconditions(self, d):
        if not is_simple(d):
            raise PreconditionFailed("the fan has more than one maximal cone")
        if not is_full_rank(d):
            raise PreconditionFailed("the maximal cone is not full dimensional")
        if locally_factorial_diagnostics(d):
            raise PreconditionFailed("the datum is not locally factorial")

    def verdict(self, d):
        self.preconditions(d)
        e_st = stringy_euler(d, cross_check=self.cfg.check.cross_check)
        e = euler(d, cross_check=self.cfg.check.cross_check)
        result = StringySmoothness(e_st, e, e_st == e)
        if self.cfg.check.cross_check:
            pattern = SmoothCheck().verdict(d)
            if pattern.holds != result.equal:
                raise InternalError(f"e_st = {e_st}, e = {e} but the Dynkin pattern says smooth = {pattern.holds}")
        logger.debug("stringy smoothness: %s", result)
        return result


def check_stringy_smooth(d) -> StringySmoothness:
    """
    Raises:
        PreconditionFailed: For non simple, non full rank or non locally factorial data.
    """
    return StringySmoothCheck().verdict(d)
