"""
Command-line entry point ``parcontract``.
"""

import argparse
import asyncio
import logging
import sys

from . import main as api
from .request import build_config
from .response import render, to_json, write_json
from .types import (
    ConfigurationError,
    ExitCode,
    Family,
    OutputFormat,
    ParContractException,
    SuiteName
)

_STDOUT = '-'


def _add_algebra_arguments(parser, partition=False):
    parser.add_argument('--type', dest='lie_type', choices=Family.choices(),
                        help='classical family')
    parser.add_argument('--rank', type=int, help='rank; derived from the composition if omitted')
    if partition:
        parser.add_argument('--partition', help='partition, e.g. 6,4,2')
    else:
        parser.add_argument('--composition', help='flag composition, e.g. 3,2,1')
        parser.add_argument('--central', type=int, help='size of the central block (B, C, D)')

def _add_run_arguments(parser):
    parser.add_argument('--trials', type=int, help='random trials (default 20)')
    parser.add_argument('--seed', type=int, help='run seed (default 0)')
    parser.add_argument('--json', metavar='PATH',
                        help=f'write a JSON report to PATH ({_STDOUT} for standard output)')
    parser.add_argument('--timings', action='store_true', default=None,
                        help='include run times in the JSON report')
    parser.add_argument('--verbose', action='store_true', help='log progress')

def build_parser():
    """Returns the argument parser of the ``parcontract`` command."""

    parser = argparse.ArgumentParser(
        prog='parcontract',
        description='Exact computations with parabolic contractions of classical Lie algebras.'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    info = commands.add_parser('info', help='dimensions, Richardson element and index')
    _add_algebra_arguments(info)
    _add_run_arguments(info)

    degrees = commands.add_parser('degrees', help='degree combinatorics of a partition')
    _add_algebra_arguments(degrees, partition=True)
    _add_run_arguments(degrees)

    verify = commands.add_parser('verify', help='run a verification suite')
    verify.add_argument('suite', choices=SuiteName.choices())
    _add_algebra_arguments(verify)
    _add_run_arguments(verify)
    verify.add_argument('--probes', type=int, help='points for invariance probes (default 3)')

    return parser

def _kwargs(args):
    kwargs = vars(args).copy()
    for key in ('command', 'suite', 'verbose'):
        kwargs.pop(key, None)
    return kwargs

async def _run(args):
    kwargs = _kwargs(args)
    cfg = build_config(args.command, {**kwargs, 'suite': getattr(args, 'suite', None)})

    if args.command == 'info':
        report = await api.info(**kwargs)
    elif args.command == 'degrees':
        report = await api.degrees(**kwargs)
    else:
        report = await api.run_verification(args.suite, **kwargs)

    return cfg, report

def _emit(cfg, report):
    if cfg.output_format == OutputFormat.JSON and cfg.output_path == _STDOUT:
        print(to_json(report, cfg, cfg.timings))
        return

    print(render(report))
    if cfg.output_path is not None:
        write_json(report, cfg, cfg.output_path, cfg.timings)

def main(argv=None):
    """
    Runs the command line and returns its exit code:
    0 when the command succeeded, 1 when a check failed, 2 for configuration errors.
    """

    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s'
    )

    try:
        cfg, report = asyncio.run(_run(args))
    except ConfigurationError as exc:
        print(f'parcontract: error: {exc.message}', file=sys.stderr)
        if exc.details:
            print(f'parcontract: details: {exc.details}', file=sys.stderr)
        return ExitCode.CONFIGURATION_ERROR.value
    except ParContractException as exc:
        print(f'parcontract: {exc.message}', file=sys.stderr)
        return ExitCode.CHECK_FAILURE.value

    _emit(cfg, report)

    passed = getattr(report, 'passed', True)
    return ExitCode.PASSED.value if passed else ExitCode.CHECK_FAILURE.value
