import copy
import logging
from abc import ABCMeta, abstractmethod
from dataclasses import fields
from .config import config as default_config

logger = logging.getLogger(__name__)


class BaseHoro(metaclass=ABCMeta):
    """
    Abstract base of the HoroCalc engines (checks, oracle, sweeps).

    Every engine owns a private copy of the configuration, updated with the
    keyword arguments given at construction time.
    """

    @abstractmethod
    def __init__(self, **kwargs):
        self._init_config(**kwargs)

    def _init_config(self, **kwargs) -> None:
        """
        Initialize the configuration of the engine.

        The default configuration is copied, then updated with any keyword
        arguments. Each key is routed to the first configuration section that
        defines it; unknown keys are ignored with a warning.

        Args:
            **kwargs: Arbitrary keyword arguments.

        Returns:
            None
        """
        self.cfg = copy.deepcopy(default_config)

        for key, value in kwargs.items():
            for section in fields(self.cfg):
                subconfig = getattr(self.cfg, section.name)
                if hasattr(subconfig, key):
                    setattr(subconfig, key, value)
                    break
            else:  # if no break, attribute was not found in any subconfig
                logger.warning("Invalid config key: %s - this will be ignored.", key)
