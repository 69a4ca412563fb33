from ._base import Verdict, BaseCheck
from ._factorial import QGorensteinCheck, LocallyFactorialCheck, check_q_gorenstein, check_locally_factorial
from ._smooth import SmoothCheck, pattern_failures, check_smooth
from ._stringy_smooth import StringySmoothness, StringySmoothCheck, check_stringy_smooth
from ._report import InvariantReport, Reporter, invariant_report, ladder_verdicts
