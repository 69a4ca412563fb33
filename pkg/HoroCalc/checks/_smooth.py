from typing import List
from ._base import BaseCheck, Verdict
from ..fan import Diagnostic, locally_factorial_diagnostics
from ..roots import components, dynkin_shape


def pattern_failures(rs, I, F) -> List[str]:
    """
    Components of the diagram on I u F that break the smoothness pattern.

    A component passes when it has no color, when it is a simply laced path
    with a single color at one end, or when it is a path whose double edge ends
    in the long root and its single color sits at the opposite (short) end.
    """
    out = []
    for comp in components(rs, set(I) | set(F)):
        colors = comp & frozenset(F)
        if not colors:
            continue
        kind, path = dynkin_shape(rs, comp)
        if len(colors) != 1:
            out.append(f"component {sorted(comp)} carries colors {sorted(colors)}")
        elif kind == 'A' and next(iter(colors)) in (path[0], path[-1]):
            continue
        elif kind == 'C' and colors == {path[0]}:
            continue
        else:
            out.append(f"component {sorted(comp)} of shape {kind} with color {sorted(colors)}")
    return out


class SmoothCheck(BaseCheck):
    """
    Local factoriality plus the Dynkin pattern on every maximal colored cone.
    """

    name = "smooth"

    def verdict(self, d):
        diagnostics = list(locally_factorial_diagnostics(d))
        for i, colored in enumerate(d.fan.maximal_cones):
            for failure in pattern_failures(d.rs, d.I, colored.colors):
                diagnostics.append(Diagnostic(i, "DynkinPattern", failure))
        return Verdict(self.name, not diagnostics, diagnostics)


def check_smooth(d) -> Verdict:
    return SmoothCheck().verdict(d)
