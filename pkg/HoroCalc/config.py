import os
from dataclasses import dataclass, field
from dotenv import load_dotenv

# HOROCALC_* variables may live in a .env file next to the working directory
load_dotenv()


@dataclass
class RenderConfig:
    """
    Configuration parameters for rendering reports.

    Attributes:
        var (str): Variable used when printing rational functions: 'q', 'uv' or 'L'.
                   Default is 'q'.
        json (bool): If set to True, reports are emitted as JSON instead of text. Default is False.
        indent (int): Indentation of the JSON output. Default is 2.
    """

    var: str = os.environ.get('HOROCALC_VAR', 'q')
    json: bool = False
    indent: int = 2


@dataclass
class OracleConfig:
    """
    Configuration parameters for the brute-force lattice summation oracle.

    Attributes:
        bound (int): Lowest omega value -B kept by the oracle. None means
                     bound_factor times the largest ray weight. Default is None.
        bound_factor (int): Multiplier applied to the largest ray weight when no
                            explicit bound is given. Default is 10.
    """

    bound: int = None
    bound_factor: int = 10


@dataclass
class CheckConfig:
    """
    Configuration parameters for the verdict computations.

    Attributes:
        cross_check (bool): If set to True, closed-form Euler numbers and the two
                            smoothness paths are compared whenever their hypotheses
                            hold, and a disagreement raises an InternalError.
                            Default is True.
    """

    cross_check: bool = True


@dataclass
class SweepConfig:
    """
    Configuration parameters for the exhaustive sweeps.

    Attributes:
        max_rank (int): Largest rank of the simple types visited by the smoothness
                        ladder sweep. Default is 5.
        table_max_rank (int): Largest rank visited by the minuscule table sweep.
                              Default is 8.
        progress (bool): If set to True, a tqdm progress bar is shown on stderr.
                         Default is True.
    """

    max_rank: int = int(os.environ.get('HOROCALC_SWEEP_MAX_RANK', 5))
    table_max_rank: int = 8
    progress: bool = True


@dataclass
class LogConfig:
    """
    Configuration parameters for logging.

    Attributes:
        level (str): Logging level name for the root handler. Default is the value of
                     HOROCALC_LOG_LEVEL, or 'WARNING'.
    """

    level: str = os.environ.get('HOROCALC_LOG_LEVEL', 'WARNING')


@dataclass
class Config:
    """
    Master configuration object that contains all the configuration classes.

    Attributes:
        render (RenderConfig): The report rendering configuration. Default is RenderConfig().
        oracle (OracleConfig): The series oracle configuration. Default is OracleConfig().
        check (CheckConfig): The verdict configuration. Default is CheckConfig().
        sweep (SweepConfig): The sweep configuration. Default is SweepConfig().
        log (LogConfig): The logging configuration. Default is LogConfig().
    """

    render: RenderConfig = field(default_factory=RenderConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    check: CheckConfig = field(default_factory=CheckConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    log: LogConfig = field(default_factory=LogConfig)


config = Config()
