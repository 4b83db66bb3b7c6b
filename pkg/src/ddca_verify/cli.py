# language=rst
"""Command line front end.

Exit codes: ``0`` every selected verification passed, ``1`` a verification failed (the report
holds the diff), ``2`` the configuration or the flags cannot be run, ``3`` an internal
invariant was violated, ``4`` nothing failed but scripts were skipped (``--full`` runs them).

.. code-block:: console

    $ ddca-verify --suite section6 --type A --n 4 --smax 3 --report json
    $ ddca-verify --script z-central --n 5
    $ ddca-verify --list
"""
import argparse
import logging
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .exceptions import ConfigurationError, DdcaError, DegreeCapError, DependencyError
from .reports import FORMATS, write_report
from .rootsys import DYNKIN_TYPES
from .suites.base import SuiteConfig
from .suites.registry import ALIASES, list_scripts, run_script_named, run_suites

__all__ = ['EXIT_OK', 'EXIT_FAILED', 'EXIT_CONFIG', 'EXIT_INVARIANT', 'EXIT_INCOMPLETE',
           'build_parser', 'config_from_args', 'main']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_INVARIANT = 3
EXIT_INCOMPLETE = 4


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'expected a rational p/q, got {text!r}')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ddca-verify',
                                     description='Replay derivations in deformed double current algebras exactly.')
    # -1/2 is a value for --lambda and --beta, not an option
    parser._negative_number_matcher = re.compile(r'^-\d+$|^-\d*\.\d+$|^-\d+/\d+$')
    target = parser.add_mutually_exclusive_group()
    target.add_argument('--suite', action='append', metavar='NAME',
                        help='suite name or alias; repeat to run several suites')
    target.add_argument('--script', metavar='NAME', help='replay one script and everything it rests on')
    target.add_argument('--list', action='store_true', help='list suites and scripts with their anchors')
    parser.add_argument('--type', choices=DYNKIN_TYPES, help='Dynkin type of g (default A)')
    parser.add_argument('--rank', type=int, help='rank of g')
    parser.add_argument('--n', type=int, help='n for g = sl_n, the same as --type A --rank n-1')
    parser.add_argument('--smax', type=int, default=4, help='highest current degree (default 4)')
    parser.add_argument('--lambda', dest='lam', type=_fraction, metavar='P/Q',
                        help='also evaluate computed scalars at this λ (needs --beta)')
    parser.add_argument('--beta', type=_fraction, metavar='P/Q', help='also evaluate computed scalars at this β')
    parser.add_argument('--report', choices=FORMATS, default='text', help='report format (default text)')
    parser.add_argument('--out', metavar='PATH', help='write the report here instead of standard output')
    parser.add_argument('--jobs', type=int, default=1, help='number of suites run in parallel processes')
    parser.add_argument('--confluence', type=int, default=1,
                        help='comparisons per step recomputed along both swap orders (default 1)')
    parser.add_argument('--full', action='store_true', help='also run the scripts marked slow')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG')
    return parser


def config_from_args(args: argparse.Namespace) -> SuiteConfig:
    dynkin_type = args.type or 'A'
    rank = args.rank
    if args.n is not None:
        if dynkin_type != 'A':
            raise ConfigurationError(f'--n describes sl_n; it cannot be combined with --type {dynkin_type}.')
        if rank is not None and rank != args.n - 1:
            raise ConfigurationError(f'--n {args.n} and --rank {rank} disagree.')
        rank = args.n - 1
    if (args.lam is None) != (args.beta is None):
        raise ConfigurationError('--lambda and --beta go together.')
    specializations = () if args.lam is None else ((args.lam, args.beta),)
    config = SuiteConfig(dynkin_type, 3 if rank is None else rank, args.smax, specializations, args.jobs,
                         args.confluence, args.full)
    return config.validate()


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger('ddca_verify')
    root.handlers[:] = [handler]
    root.setLevel(level)


def _print_list(config: SuiteConfig, out):
    aliases = {name: alias for alias, name in ALIASES.items()}
    current = None
    for entry in list_scripts(config):
        if entry.suite != current:
            current = entry.suite
            alias = f' ({aliases[current]})' if current in aliases else ''
            out.write(f'{current}{alias}\n')
        slow = '  [slow]' if entry.slow else ''
        out.write(f'  {entry.path}  {entry.anchor}{slow}\n')


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        if args.list:
            _print_list(config, sys.stdout)
            return EXIT_OK
        if args.script:
            reports = [run_script_named(args.script, config)]
        elif args.suite:
            reports = run_suites(args.suite, config, args.jobs)
        else:
            raise ConfigurationError('Give --suite, --script or --list.')
        write_report(reports, args.report, args.out)
    except (ConfigurationError, DependencyError, DegreeCapError) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_CONFIG
    except DdcaError as error:
        logger.exception('internal invariant violated')
        print(f'internal error: {error}', file=sys.stderr)
        return EXIT_INVARIANT
    failed: List[str] = [report.suite for report in reports if report.failures]
    if failed:
        logger.warning('failed: %s', ', '.join(failed))
        return EXIT_FAILED
    incomplete = [report.suite for report in reports if not report.complete]
    if incomplete:
        logger.warning('incomplete: %s', ', '.join(incomplete))
        return EXIT_INCOMPLETE
    return EXIT_OK
