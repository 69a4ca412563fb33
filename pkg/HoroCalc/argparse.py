import argparse
from HoroCalc.config import config as cfg

COMMANDS = ('validate', 'invariants', 'smooth', 'orbits', 'oracle', 'sweep')


def arg_parser(argv=None):
    """
    Defines and parses the command line arguments of horocalc.

    Args:
        argv (list of str): Arguments to parse. Default is None, i.e. sys.argv.

    Returns:
        args: Namespace object that contains the values of command line arguments.

    Example Usage:
        >>> args = arg_parser(['invariants', 'data/ex_grass.json', '--var', 'uv'])
        >>> print(args.var)
        uv
    """

    parser = argparse.ArgumentParser(prog='horocalc',
                                     description='Stringy invariants of horospherical varieties')

    parser.add_argument('command', choices=COMMANDS,
                        help='validate: fan axioms; invariants: full report; smooth: smoothness ladder; '
                             'orbits: orbit poset; oracle: brute-force check of the lattice sum; '
                             'sweep: exhaustive table and ladder sweeps.')
    parser.add_argument('file', nargs='?', default=None,
                        help='Input document (JSON). "-" or nothing reads stdin. Not used by sweep.')

    # Render Config
    parser.add_argument('--json', action='store_true', default=cfg.render.json,
                        help='If set, reports are printed as JSON.')
    parser.add_argument('--var', type=str, choices=('uv', 'q', 'L'), default=cfg.render.var,
                        help='Variable used to print rational functions.')
    parser.add_argument('--indent', type=int, default=cfg.render.indent,
                        help='Indentation of the JSON output.')

    # Oracle Config
    parser.add_argument('--bound', type=int, default=cfg.oracle.bound,
                        help='Truncation bound B of the oracle: omega values down to -B are compared.')
    parser.add_argument('--bound_factor', '--bound-factor', type=int, default=cfg.oracle.bound_factor,
                        help='B defaults to this factor times the largest ray weight.')

    # Check Config
    parser.add_argument('--no_cross_check', '--no-cross-check', dest='cross_check', action='store_false',
                        default=cfg.check.cross_check,
                        help='If set, closed forms and the second smoothness path are not compared.')

    # Sweep Config
    parser.add_argument('--max_rank', '--max-rank', type=int, default=cfg.sweep.max_rank,
                        help='Largest rank of the smoothness ladder sweep.')
    parser.add_argument('--table_max_rank', '--table-max-rank', type=int, default=cfg.sweep.table_max_rank,
                        help='Largest rank of the minuscule table sweep.')
    parser.add_argument('--no_progress', '--no-progress', dest='progress', action='store_false',
                        default=cfg.sweep.progress,
                        help='If set, no progress bar is drawn during sweeps.')

    # Log Config
    parser.add_argument('--log_level', '--log-level', type=str.upper, default=cfg.log.level,
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'),
                        help='Level of the diagnostics printed on stderr.')

    return parser.parse_args(argv)
