from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import List
from ..base import BaseHoro
from ..fan import Diagnostic


@dataclass
class Verdict:
    """
    Outcome of a check.

    Attributes:
        name (str): Name of the property checked.
        holds (bool): Whether the property holds.
        diagnostics (list of Diagnostic): Which cone failed which condition.
        details (dict): Values computed along the way, e.g. the Gorenstein index.
    """

    name: str
    holds: bool
    diagnostics: List[Diagnostic] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {"name": self.name, "holds": self.holds,
                "diagnostics": [d.to_dict() for d in self.diagnostics],
                "details": {k: str(v) for k, v in self.details.items()}}


class BaseCheck(BaseHoro, metaclass=ABCMeta):
    """
    Abstract base class for all checks.
    """

    name = "check"

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    @abstractmethod
    def verdict(self, d):
        """
        Decides the property for the given datum.

        Args:
            d (HorosphericalDatum): A validated datum.

        Returns:
            Verdict: The decision with its diagnostic trail.
        """
        pass
