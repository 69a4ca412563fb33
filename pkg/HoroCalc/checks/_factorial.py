from ._base import BaseCheck, Verdict
from ..fan import Diagnostic, locally_factorial_diagnostics
from ..stringy import compute_omega
from ..errors import NotQGorenstein


class QGorensteinCheck(BaseCheck):
    """
    Existence of the piecewise linear canonical function.
    """

    name = "q_gorenstein"

    def verdict(self, d):
        try:
            omega = compute_omega(d)
        except NotQGorenstein as exc:
            cone = exc.details.get("cone")
            cone = cone if isinstance(cone, int) else None
            return Verdict(self.name, False, [Diagnostic(cone, "NotQGorenstein",
                                                         f"{exc}: {exc.details.get('witness')}")])
        return Verdict(self.name, True, details={"gorenstein_index": omega.gorenstein_index})


class LocallyFactorialCheck(BaseCheck):
    """
    Injectivity of rho on the colors and the partial basis condition, cone by cone.
    """

    name = "locally_factorial"

    def verdict(self, d):
        diagnostics = locally_factorial_diagnostics(d)
        return Verdict(self.name, not diagnostics, diagnostics)


def check_q_gorenstein(d) -> Verdict:
    return QGorensteinCheck().verdict(d)


def check_locally_factorial(d) -> Verdict:
    return LocallyFactorialCheck().verdict(d)
