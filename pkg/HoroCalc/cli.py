"""
Command line entry point: ``horocalc <command> [file] [flags]``.

Exit codes: 0 success, 1 invalid input, 2 not Q-Gorenstein where a canonical
function was required, 3 internal error.
"""
import logging
import sys
from typing import Tuple
from .argparse import arg_parser
from .base import BaseHoro
from .checks import Reporter
from .document import parse_document, render_json
from .fan import HorosphericalDatum, orbits, validate_fan
from .stringy import SeriesOracle
from .sweep import LadderSweep, TableSweep
from .errors import DocumentError, HoroError, InternalError, NotQGorenstein

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_NOT_Q_GORENSTEIN, EXIT_INTERNAL = 0, 1, 2, 3


class Runner(BaseHoro):
    """
    Dispatches one command on one document and renders the report.

    Args:
        **kwargs: Configuration overrides, usually the parsed command line flags.
    """

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

    def _emit(self, payload, text: str) -> str:
        return render_json(payload, self.cfg.render.indent) if self.cfg.render.json else text

    def validate(self, d: HorosphericalDatum) -> Tuple[int, str]:
        violations = validate_fan(d)
        text = "valid" if not violations else "\n".join(
            f"[{v.code}{'' if v.cone is None else f' cone {v.cone}'}] {v.message}" for v in violations)
        payload = {"valid": not violations, "violations": [v.to_dict() for v in violations]}
        return (EXIT_INVALID if violations else EXIT_OK), self._emit(payload, text)

    def invariants(self, d: HorosphericalDatum) -> Tuple[int, str]:
        report = Reporter(cross_check=self.cfg.check.cross_check).report(d)
        code = EXIT_NOT_Q_GORENSTEIN if report.gorenstein_index is None else EXIT_OK
        return code, self._emit(report.to_dict(), report.render(self.cfg.render.var))

    def smooth(self, d: HorosphericalDatum) -> Tuple[int, str]:
        reporter = Reporter(cross_check=self.cfg.check.cross_check)
        verdicts = reporter.ladder(d)
        euler_path = reporter.stringy_smoothness(d)
        lines = [f"{name}: {str(v.holds).lower()}" for name, v in verdicts.items()]
        for v in verdicts.values():
            lines += [f"  [{x.condition}{'' if x.cone is None else f' cone {x.cone}'}] {x.message}"
                      for x in v.diagnostics]
        if euler_path is not None:
            lines.append(f"e_st = {euler_path.stringy_euler}, e = {euler_path.euler}, "
                         f"equal: {str(euler_path.equal).lower()}")
        payload = {"verdicts": {k: v.to_dict() for k, v in verdicts.items()},
                   "stringy_smoothness": None if euler_path is None else euler_path.to_dict()}
        return EXIT_OK, self._emit(payload, "\n".join(lines))

    def orbits(self, d: HorosphericalDatum) -> Tuple[int, str]:
        found = orbits(d)
        payload = [{"index": o.index, "dim": o.dim, "rank_part": o.rank_part, "flag_part": o.flag_part,
                    "rays": [list(e) for e in o.colored_cone.cone.rays],
                    "colors": sorted(o.colored_cone.colors), "closure": list(o.closure)} for o in found]
        text = "\n".join(f"orbit {o.index}: dim {o.dim} = {o.rank_part} + {o.flag_part}, "
                         f"{o.colored_cone}, closure {list(o.closure)}" for o in found)
        return EXIT_OK, self._emit(payload, text)

    def oracle(self, d: HorosphericalDatum) -> Tuple[int, str]:
        comparison = SeriesOracle(bound=self.cfg.oracle.bound,
                                  bound_factor=self.cfg.oracle.bound_factor).compare(d)
        verdict = "PASS" if comparison.passed else "FAIL"
        text = f"{verdict} (bound {comparison.bound})"
        if comparison.mismatches:
            text += "\nmismatched exponents: " + ", ".join(str(e) for e in comparison.mismatches)
        return (EXIT_OK if comparison.passed else EXIT_INTERNAL), self._emit(comparison.to_dict(), text)

    def sweep(self) -> Tuple[int, str]:
        overrides = {"progress": self.cfg.sweep.progress, "cross_check": self.cfg.check.cross_check}
        table = TableSweep(table_max_rank=self.cfg.sweep.table_max_rank, **overrides).rows()
        ladder = LadderSweep(max_rank=self.cfg.sweep.max_rank, **overrides).rows()
        failures = sum(not row.holds for row in table) + sum(not row.agree for row in ladder)
        payload = {"minuscule_table": [vars(row) for row in table],
                   "smoothness_ladder": [row.to_dict() for row in ladder],
                   "failures": failures}
        lines = [f"{row.type} node {row.alpha}: a = {row.a_alpha}, bound {row.bound}, "
                 f"minuscule {str(row.minuscule).lower()}, {'ok' if row.holds else 'FAIL'}" for row in table]
        lines.append(f"smoothness ladder: {len(ladder)} data, "
                     f"{sum(row.pattern for row in ladder)} smooth, {sum(not r.agree for r in ladder)} mismatches")
        return (EXIT_OK if not failures else EXIT_INTERNAL), self._emit(payload, "\n".join(lines))

    def run(self, command: str, text: str = None) -> Tuple[int, str]:
        """
        Run one command.

        Args:
            command (str): One of validate, invariants, smooth, orbits, oracle, sweep.
            text (str): The input document; unused by sweep.

        Returns:
            (int, str): Exit code and the report for stdout ('' when there is none).
        """
        try:
            if command == 'sweep':
                return self.sweep()
            parsed = parse_document(text)
            d = parsed.datum
            if command == 'validate':
                return self.validate(d)
            violations = validate_fan(d)
            if violations:
                for v in violations:
                    logger.error("[%s] %s", v.code, v.message)
                return EXIT_INVALID, ""
            return getattr(self, command)(d)
        except DocumentError as exc:
            logger.error("%s", exc)
            for problem in exc.diagnostics:
                logger.error("%s", problem)
            return EXIT_INVALID, ""
        except NotQGorenstein as exc:
            logger.error("%s: %s", exc, exc.details.get("witness"))
            return EXIT_NOT_Q_GORENSTEIN, ""
        except InternalError as exc:
            logger.error("internal error: %s", exc)
            return EXIT_INTERNAL, ""
        except HoroError as exc:
            logger.error("[%s] %s", exc.code, exc)
            return EXIT_INVALID, ""


def run(command: str, text: str = None, **kwargs) -> Tuple[int, str]:
    return Runner(**kwargs).run(command, text)


def main(argv=None) -> int:
    args = arg_parser(argv)
    logging.basicConfig(stream=sys.stderr, level=args.log_level,
                        format="%(levelname)s %(name)s: %(message)s")
    text = None
    if args.command != 'sweep':
        if args.file in (None, '-'):
            text = sys.stdin.read()
        else:
            try:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                logger.error("cannot read %s: %s", args.file, exc)
                return EXIT_INVALID
    overrides = {k: v for k, v in vars(args).items() if k not in ('command', 'file', 'log_level')}
    try:
        code, report = run(args.command, text, **overrides)
    except Exception:
        logger.exception("unexpected failure")
        return EXIT_INTERNAL
    if report:
        print(report)
    return code


if __name__ == '__main__':
    sys.exit(main())
