#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# vim: ts=4:sw=4:et:

import sys
import argparse
import json

import src.api.config

from src.api import errmsg
from src.api import global_ as gl
from src.api.config import OPTIONS
from src.api.constants import EXITCODE
from src.api.constants import MODEL
from src.api.constants import STATUS
from src.api.constants import SYM
from src.api.errors import Error
from src.api.errors import InvalidInstanceError
from src.api.errors import PreconditionError
from src.api.errors import RcUndefinedError
from src.api.options import InvalidValueError
from src.api.utils import open_file
from src.api.utils import parse_fraction
from src.harness import InstanceFormatError
from src.harness import aggregate
from src.harness import format_table
from src.harness import generate_basic
from src.harness import generate_downcld
from src.harness import load_instance
from src.harness import load_reports
from src.harness import read_sbox
from src.harness import run_bench
from src.harness import run_instance
from src.harness import save_instance
from src.harness import sbox_graph
from src.harness import suite
from src.harness.aggregate import write_csv
from src.harness.bench import SUITES
from src.harness.bench import default_configs
from src.harness.generators import SHAPES
from src.harness.runner import RunConfig
from src.matrixmodels import EnhancementOptions
from src.mipcore import IncompatibleOptionsError

from .version import VERSION

# Errors meaning the input (files, flags) is wrong
BAD_INPUT_ERRORS = (InvalidInstanceError, RcUndefinedError, PreconditionError, IncompatibleOptionsError,
                    InvalidValueError)


def _flag01(value: str) -> bool:
    if value not in ('0', '1'):
        raise argparse.ArgumentTypeError("expected 0 or 1, got '%s'" % value)
    return value == '1'


def _sym_flag(value: str) -> str:
    level = SYM.from_flag(value)
    if level is None:
        raise argparse.ArgumentTypeError("expected 0, s or a, got '%s'" % value)
    return level


def _rational(value: str):
    result = parse_fraction(value)
    if result is None or result <= 0:
        raise argparse.ArgumentTypeError("expected a positive rational p/q, got '%s'" % value)
    return result


def _add_limits(parser):
    parser.add_argument('--time-limit', type=float, default=None,
                        help='Wall clock seconds per solve (default %s)' % gl.DEFAULT_TIME_LIMIT)
    parser.add_argument('--node-limit', type=int, default=None,
                        help='Branch-and-bound nodes per solve (default: unlimited)')


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='rc', description='Exact epsilon-relaxation complexity of lattice sets')
    parser.add_argument('-d', '--debug', dest='debug', default=OPTIONS.Debug, action='count',
                        help='Enable verbosity/debugging output. Additional -d increase verbosity/debug level')
    parser.add_argument('-e', '--errmsg', type=str, dest='stderr', default=OPTIONS.StdErrFileName,
                        help='Error messages file (standard error console by default)')
    parser.add_argument('--version', action='version', version='%(prog)s {0}'.format(VERSION))
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    solve = commands.add_parser('solve', help='Compute rc_eps of an instance')
    solve.add_argument('--instance', required=True, help='Instance JSON file')
    solve.add_argument('--model', choices=MODEL.models, default=MODEL.compact,
                       help='Model to solve (default %(default)s)')
    solve.add_argument('--hiding', type=_flag01, default=False, help='Hiding set cuts: 0 or 1')
    solve.add_argument('--sym', type=_sym_flag, default=SYM.none,
                       help='Symmetry handling: 0 (none), s (simple) or a (advanced)')
    solve.add_argument('--prop', type=_flag01, default=False, help='Convexity propagation: 0 or 1')
    solve.add_argument('--prop-intersection', action='store_true',
                       help='Also run the intersection propagator')
    solve.add_argument('--redundancy', action='store_true',
                       help='Couple unused inequalities to the trivial inequality')
    solve.add_argument('--pricing-hiding', action='store_true',
                       help='Hiding pairs in the pricing problem (colgen and hybrid models)')
    solve.add_argument('--eps', type=_rational, default=None, help='Separation margin p/q (overrides the file)')
    solve.add_argument('--k', type=int, default=None, help='Number of inequality slots (default: facet count)')
    solve.add_argument('--no-verify', action='store_true', help='Skip the exact verification of the result')
    solve.add_argument('--seed', type=int, default=None, help='Recorded in the report')
    solve.add_argument('--out', type=str, default=None, help='Directory for the JSON report and CSV row')
    _add_limits(solve)

    gen = commands.add_parser('gen', help='Generate an instance file')
    gen.add_argument('kind', choices=sorted(SHAPES) + ['downcld', 'sbox'])
    gen.add_argument('--dim', type=int, default=None, help='Dimension (basic shapes and downcld)')
    gen.add_argument('--radius', type=int, default=1, help='l1 radius of Y (default %(default)s)')
    gen.add_argument('--set', dest='sets', type=int, nargs='+', action='append', default=[],
                     help='A member of the antichain (downcld), e.g. --set 1 2 --set 3')
    gen.add_argument('--file', type=str, default=None, help='S-box file, one 0/1 vector per line (sbox)')
    gen.add_argument('--table', type=str, default=None,
                     help='S-box lookup table as comma separated hex values; writes the S-box file (sbox)')
    gen.add_argument('--eps', type=_rational, default=None, help='Separation margin p/q')
    gen.add_argument('--name', type=str, default=None, help='Instance name')
    gen.add_argument('-o', '--output', type=str, default=None, help='Output file (standard output by default)')

    bench = commands.add_parser('bench', help='Run a suite of instances')
    bench.add_argument('--suite', choices=sorted(SUITES), default='tiny')
    bench.add_argument('--models', nargs='+', choices=MODEL.models, default=list(MODEL.models))
    bench.add_argument('--grid', action='store_true', help='Every combination of hiding, sym and prop')
    bench.add_argument('--workers', type=int, default=1, help='Worker processes (default %(default)s)')
    bench.add_argument('--out', type=str, default=None, help='Directory for the reports')
    _add_limits(bench)

    agg = commands.add_parser('agg', help='Aggregate the reports of a directory')
    agg.add_argument('--in', dest='input', required=True, help='Directory with JSON reports')
    agg.add_argument('--group-by', default='group', help='Report field to group by (default %(default)s)')
    agg.add_argument('--csv', type=str, default=None, help='Also write the table as CSV')

    return parser


def _print(msg: str = ''):
    OPTIONS.stdout.write('%s\n' % msg)


def _solve(options) -> int:
    spec = load_instance(options.instance)
    if options.eps is not None:
        spec = spec.with_eps(options.eps)

    if options.pricing_hiding and options.model not in (MODEL.colgen, MODEL.hybrid):
        raise PreconditionError('--pricing-hiding needs the colgen or hybrid model')

    opts = EnhancementOptions(hiding=options.hiding or options.pricing_hiding, sym=options.sym, prop=options.prop,
                              prop_intersection=options.prop_intersection,
                              redundancy_coupling=options.redundancy)
    cfg = RunConfig(options.model, opts, k=options.k, seed=options.seed, out=options.out,
                    verify=not options.no_verify)
    report = run_instance(spec, cfg)

    value = '-' if report.value is None else report.value
    bound = '-' if report.dual_bound is None else report.dual_bound
    _print('%s [%s]: %s rc=%s dual=%s nodes=%i lps=%i time=%.3fs verified=%s' % (
        report.name, report.setting, report.status, value, bound, report.node_count, report.lp_count,
        report.wall_time, 'yes' if report.verified else 'no'))
    for ineq in report.relaxation:
        _print('  %s' % (ineq, ))

    if report.reason is not None:
        return EXITCODE.verification_failed
    if report.status == STATUS.limit and (report.value is None or report.dual_bound is None):
        return EXITCODE.limit_without_bounds
    return EXITCODE.ok


def _gen(options):
    if options.kind in SHAPES:
        if options.dim is None:
            raise InstanceFormatError('--dim is needed for %s' % options.kind)
        spec = generate_basic(options.kind, options.dim, options.radius, options.eps)
        if options.name:
            spec = spec._replace(name=options.name)
    elif options.kind == 'downcld':
        spec = generate_downcld(options.sets, options.dim, options.radius, options.eps, options.name)
    elif options.table is not None:
        try:
            table = [int(v, 16) for v in options.table.split(',')]
        except ValueError:
            raise InstanceFormatError("invalid S-box table '%s'" % options.table)
        text = '\n'.join(sbox_graph(table)) + '\n'
        if options.output is None:
            OPTIONS.stdout.write(text)
        else:
            with open_file(options.output, 'wt', 'utf-8') as f:
                f.write(text)
        return EXITCODE.ok
    elif options.file is not None:
        spec = read_sbox(options.file, options.eps, options.name)
    else:
        raise InstanceFormatError('sbox needs --file or --table')

    if options.output is None:
        _print(json.dumps(spec.to_json(), indent=2))
    else:
        save_instance(spec, options.output)
    return EXITCODE.ok


def _bench(options):
    reports = run_bench(suite(options.suite), default_configs(options.models, options.grid), options.out,
                        options.workers)
    for report in reports:
        value = '-' if report.value is None else report.value
        _print('%-24s %-28s %-8s rc=%s nodes=%i time=%.3fs' % (report.name, report.setting, report.status, value,
                                                               report.node_count, report.wall_time))

    if any(r.reason is not None for r in reports) or gl.has_errors:
        return EXITCODE.verification_failed
    return EXITCODE.ok


def _agg(options):
    reports = load_reports(options.input)
    if not reports:
        raise InstanceFormatError("no reports found in '%s'" % options.input)
    rows = aggregate(reports, options.group_by)
    _print(format_table(rows))
    if options.csv is not None:
        write_csv(rows, options.csv)
    return EXITCODE.ok


COMMANDS = {
    'solve': _solve,
    'gen': _gen,
    'bench': _bench,
    'agg': _agg
}


def main(args=None):
    """ Entry point when executed from command line.
    Returns the exit code.
    """
    src.api.config.init()
    gl.reset()

    parser = make_parser()
    options = parser.parse_args(args=args)

    # ------------------------------------------------------------
    # Setting of internal parameters according to command line
    # ------------------------------------------------------------
    OPTIONS.Debug = options.debug
    OPTIONS.StdErrFileName = options.stderr
    if getattr(options, 'time_limit', None) is not None:
        OPTIONS.time_limit = options.time_limit
    if getattr(options, 'node_limit', None) is not None:
        OPTIONS.node_limit = options.node_limit
    if getattr(options, 'eps', None) is not None:
        OPTIONS.eps = options.eps

    stderr = None
    if OPTIONS.StdErrFileName:
        stderr = OPTIONS.stderr = open_file(OPTIONS.StdErrFileName, 'wt', 'utf-8')

    try:
        return COMMANDS[options.command](options)
    except InstanceFormatError as e:
        errmsg.error_invalid_instance(e.fname, e.reason)
        return EXITCODE.bad_input
    except BAD_INPUT_ERRORS as e:
        errmsg.error(str(e))
        return EXITCODE.bad_input
    except OSError as e:
        errmsg.error('%s: %s' % (e.filename or '', e.strerror))
        return EXITCODE.bad_input
    except Error as e:
        errmsg.error(str(e))
        return EXITCODE.verification_failed
    finally:
        if stderr is not None:
            stderr.close()
            OPTIONS.stderr = sys.stderr


if __name__ == '__main__':
    sys.exit(main())
