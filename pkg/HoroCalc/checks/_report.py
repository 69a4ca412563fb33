import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional
from ._base import Verdict
from ._factorial import LocallyFactorialCheck, QGorensteinCheck
from ._smooth import SmoothCheck
from ._stringy_smooth import StringySmoothCheck, StringySmoothness
from ..base import BaseHoro
from ..fan import Diagnostic, HorosphericalDatum
from ..qfun import QPoly, QRat
from ..stringy import compute_omega, e_polynomial, euler, sr_series, stringy_E, stringy_euler
from ..errors import InternalError, NotQGorenstein, PoleAtOne, PreconditionFailed

logger = logging.getLogger(__name__)


@dataclass
class InvariantReport:
    """
    Everything the pipeline knows about one datum.

    Attributes:
        dimension (int): Dimension of G/H.
        e_poly (QPoly): E-polynomial, summed over the orbits.
        euler (int): Euler number, e_poly at q = 1.
        stringy_E (QRat): Stringy E-function, None when the datum is not Q-Gorenstein.
        stringy_euler (Fraction): Value of stringy_E at 1, None when unavailable.
        gorenstein_index (int): Index of the canonical function, None when not Q-Gorenstein.
        sr_series (QRat): Weighted Stanley-Reisner series in t, None outside its hypotheses.
        verdicts (dict): The smoothness ladder, name -> Verdict.
        diagnostics (list of Diagnostic): Why parts of the report are missing.
    """

    dimension: int
    e_poly: QPoly
    euler: int
    stringy_E: Optional[QRat] = None
    stringy_euler: Optional[Fraction] = None
    gorenstein_index: Optional[int] = None
    sr_series: Optional[QRat] = None
    verdicts: Dict[str, Verdict] = field(default_factory=dict)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    def to_dict(self):
        def opt(value, fn):
            return None if value is None else fn(value)
        return {
            "dimension": self.dimension,
            "e_polynomial": self.e_poly.to_json(),
            "euler": self.euler,
            "stringy_E": opt(self.stringy_E, QRat.to_json),
            "stringy_euler": opt(self.stringy_euler, str),
            "gorenstein_index": self.gorenstein_index,
            "sr_series": opt(self.sr_series, QRat.to_json),
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }

    def render(self, var: str = 'q') -> str:
        lines = [f"dimension: {self.dimension}",
                 f"stringy_E: {'n/a' if self.stringy_E is None else self.stringy_E.render(var)}",
                 f"e_polynomial: {self.e_poly.render(var)}",
                 f"e_st: {'n/a' if self.stringy_euler is None else self.stringy_euler}",
                 f"e: {self.euler}",
                 f"gorenstein_index: {'n/a' if self.gorenstein_index is None else self.gorenstein_index}"]
        if self.sr_series is not None:
            lines.append(f"sr_series: {self.sr_series.render('t')}")
        for name, verdict in self.verdicts.items():
            lines.append(f"{name}: {str(verdict.holds).lower()}")
        for d in self.diagnostics + [d for v in self.verdicts.values() for d in v.diagnostics]:
            where = "" if d.cone is None else f" cone {d.cone}"
            lines.append(f"  [{d.condition}{where}] {d.message}")
        return "\n".join(lines)


class Reporter(BaseHoro):
    """
    Assemble invariant reports and the smoothness ladder.

    Args:
        **kwargs: Overrides of the check configuration (cross_check).
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def ladder(self, d: HorosphericalDatum) -> Dict[str, Verdict]:
        """Q-Gorenstein, locally factorial and smooth, in that order."""
        overrides = {"cross_check": self.cfg.check.cross_check}
        return {check.name: check.verdict(d) for check in
                (QGorensteinCheck(**overrides), LocallyFactorialCheck(**overrides), SmoothCheck(**overrides))}

    def stringy_smoothness(self, d: HorosphericalDatum) -> Optional[StringySmoothness]:
        try:
            return StringySmoothCheck(cross_check=self.cfg.check.cross_check).verdict(d)
        except PreconditionFailed as exc:
            logger.info("stringy smoothness not applicable: %s", exc)
            return None

    def report(self, d: HorosphericalDatum) -> InvariantReport:
        cross_check = self.cfg.check.cross_check
        report = InvariantReport(d.dimension, e_polynomial(d), euler(d, cross_check=cross_check))
        report.verdicts = self.ladder(d)
        try:
            omega = compute_omega(d)
        except NotQGorenstein as exc:
            report.diagnostics.append(Diagnostic(None, exc.code, f"{exc}; no stringy invariants"))
            return report
        report.gorenstein_index = omega.gorenstein_index
        report.stringy_E = stringy_E(d, omega)
        try:
            report.stringy_euler = stringy_euler(d, omega, cross_check=cross_check)
        except PoleAtOne as exc:
            report.diagnostics.append(Diagnostic(None, exc.code, str(exc)))
        report.sr_series = sr_series(d, omega)
        if cross_check and report.verdicts["smooth"].holds:
            if report.stringy_E != QRat(report.e_poly):
                raise InternalError(f"smooth datum with stringy E {report.stringy_E} != E {report.e_poly}")
        return report


def invariant_report(d: HorosphericalDatum) -> InvariantReport:
    return Reporter().report(d)


def ladder_verdicts(d: HorosphericalDatum) -> Dict[str, Verdict]:
    return Reporter().ladder(d)
