'''
cli.py: Command line entry point, `heawood-ude <command>`
'''

import argparse
import logging
import sys

from heawood_ude import __version__
from heawood_ude.charpoly import (
    EXPECTED_REAL_ROOTS,
    charpoly_xl4,
    isolate_real_roots,
    refine_root)
from heawood_ude.config import SolveConfig
from heawood_ude.exceptions import HeawoodError
from heawood_ude.exporters.exporter import Exporter
from heawood_ude.exporters.json_document import (
    dumps,
    dumps_embeddings,
    load_embeddings)
from heawood_ude.incidence import (
    build_heawood_incidence,
    girth,
    verify_fano_axioms)
from heawood_ude.kernels.kernel import Kernel
from heawood_ude.solver import (
    EXPECTED_SOLUTIONS,
    polish_reference_tables,
    solve_all)
from heawood_ude.utilities import to_decimal_string
from heawood_ude.verify import certify_all, load_reference_tables

LOGGER = logging.getLogger('heawood_ude')


def precision_stages(digits):
    """ Bisection at half the digits (at least 10), polishing at all of
    them """
    refine = max(10, digits // 2)
    return (refine, digits) if digits > refine else (refine,)


def _configure_logging(args):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def _write(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w') as output:
            output.write(text)


def _summary(text, json_on_stdout):
    """ The summary line, kept off stdout while the JSON is there """
    stream = sys.stderr if json_on_stdout else sys.stdout
    stream.write(text + "\n")


def _solve(args, logger):
    config = SolveConfig.from_yaml(args.config).overlay(
        grid_points=args.grid,
        workers=args.workers,
        precision_stages=precision_stages(args.digits)
        if args.digits else None)

    if args.seed_tables:
        path = None if args.seed_tables == 'builtin' else args.seed_tables
        tables = load_reference_tables(path)
        embeddings = [candidate for _, candidate in polish_reference_tables(
            tables, config.final_digits, config.newton_max_iter, logger)]
    else:
        embeddings = solve_all(config, logger)

    exporter = Exporter.factory("JSON")
    if args.json:
        exporter.export(embeddings, args.json, logger)
    else:
        _write(dumps_embeddings(embeddings))
    if args.svg:
        Exporter.factory("SVG").export(embeddings, args.svg, logger)

    _summary("found=" + str(len(embeddings)) +
             " expected=" + str(EXPECTED_SOLUTIONS), not args.json)
    return 0 if len(embeddings) == EXPECTED_SOLUTIONS else 1


def _roots(args, logger):
    p = charpoly_xl4()
    kernel = Kernel.factory("MPMATH", args.digits)
    intervals = isolate_real_roots(p, logger)
    documents = []
    for interval in intervals:
        root = refine_root(p, interval, args.digits, logger)
        document = interval.to_dict()
        document['root'] = to_decimal_string(kernel, root)
        documents.append(document)
    _write(dumps(documents))
    _summary("real_roots=" + str(len(intervals)) +
             " expected=" + str(EXPECTED_REAL_ROOTS), True)
    return 0 if len(intervals) == EXPECTED_REAL_ROOTS else 1


def _verify(args, logger):
    embeddings = load_embeddings(args.json)
    summary = certify_all(embeddings, logger=logger)
    documents = [certificate.to_dict(e.kernel) for certificate, e
                 in zip(summary.certificates, embeddings)]
    _write(dumps(documents), args.out)
    _summary("passed=" + str(summary.passed) +
             " total=" + str(len(summary.certificates)), args.out is None)
    return 0 if summary.all_pass else 1


def _render(args, logger):
    embeddings = load_embeddings(args.json)
    Exporter.factory("SVG").export(embeddings, args.svg, logger)
    return 0


def _incidence(args, logger):
    inc = build_heawood_incidence()
    document = inc.to_dict()
    report = verify_fano_axioms(inc)
    document['axioms'] = report.to_dict()
    document['girth'] = girth(inc)
    _write(dumps(document))
    return 0 if report.all_pass and document['girth'] == 6 else 1


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive: " + text)
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog='heawood-ude',
        description='Unit distance embeddings of the Heawood graph')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    parser.add_argument('--config', metavar='PATH',
                        help='YAML file overriding the solver defaults')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    solve = commands.add_parser('solve', help='find the embeddings')
    solve.add_argument('--grid', type=_positive, metavar='N',
                       help='theta samples per branch vector')
    solve.add_argument('--digits', type=_positive, metavar='D',
                       help='final working precision')
    solve.add_argument('--workers', type=_positive, metavar='N')
    solve.add_argument('--json', metavar='PATH',
                       help='write the embeddings here instead of stdout')
    solve.add_argument('--svg', metavar='DIR',
                       help='also draw every embedding into DIR')
    solve.add_argument('--seed-tables', metavar='PATH',
                       help="polish published tables ('builtin' for the "
                            "packaged ones) instead of sweeping")
    solve.set_defaults(handler=_solve)

    roots = commands.add_parser(
        'roots', help='real roots of the characteristic polynomial of x_l4')
    roots.add_argument('--digits', type=_positive, default=20, metavar='D')
    roots.set_defaults(handler=_roots)

    verify = commands.add_parser('verify', help='certify embeddings')
    verify.add_argument('--json', metavar='PATH', required=True)
    verify.add_argument('--out', metavar='PATH',
                        help='write the certificates here instead of stdout')
    verify.set_defaults(handler=_verify)

    render = commands.add_parser('render', help='draw embeddings as SVG')
    render.add_argument('--json', metavar='PATH', required=True)
    render.add_argument('--svg', metavar='DIR', required=True)
    render.set_defaults(handler=_render)

    incidence = commands.add_parser(
        'incidence', help='the Fano plane behind the Heawood graph')
    incidence.set_defaults(handler=_incidence)
    return parser


def run(argv=None):
    """
    @rtype int
    @return 0 on success, 1 when a result misses its expected value or an
        error occurs, 2 on usage errors
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:
        return exit_.code
    _configure_logging(args)
    try:
        return args.handler(args, LOGGER)
    except HeawoodError as err:
        LOGGER.error(str(err))
        return 1


def main():
    sys.exit(run())
