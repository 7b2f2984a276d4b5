#!/usr/bin/env python
import os
import sys
import time
import hashlib
import logging
import argparse

from configuration.settings import exit_code, load_parameters
from critical_number.extremal import summarize_witness, witness_sweep
from critical_number.formula import cr_formula
from critical_number.oracle import cr_bruteforce
from critical_number.table import cr_table, parse_orders, write_table_csv
from group_core.exceptions import (BudgetExceeded, CriticalNumberError, GroupSpecError,
                                   PreconditionError, SubsetError, TheoremContradiction)
from group_core.groups import parse_group_spec
from group_core.numbertheory import smallest_prime_divisor, window_primes
from proof_tracer.certificate import (certify_direct, certify_span, sample_subsets,
                                      validate_certificate, window_parameters,
                                      write_certificate)
from reporting.cache import ResultsCache, cache_key
from reporting.report import BUDGET_EXCEEDED, FAIL, PASS, RunReport, format_report
from reporting.runfile import LoadRunfile
from sumset_engine.parallel import default_threads
from sumset_engine.subsets import GroupSubset
from theorem_lab.bounds import REPORT_COLUMNS
from theorem_lab.verifiers import EXHAUSTIVE, SAMPLED, VERIFIERS

FORMAT = '%(asctime)s %(message)s'
# options that never enter the report payload or the cache key
RUN_OPTIONS = ('command', 'threads', 'format', 'no_cache', 'runfile', 'verbose', 'log_file')

logger = logging.getLogger('critical_number')


def window_epilog(limit=1000):
    groups = sorted(p * q for p, q in window_primes(limit))
    return ('Cyclic groups C_pq of order <= %d inside the prime window '
            'p + floor(2 sqrt(p-2)) + 1 < q < 2p: %s' % (limit, ', '.join('C%d' % n for n in groups)))


def argument_parser():
    parameters = load_parameters()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threads', help='Worker processes (default: all cores)', type=int, default=None)
    common.add_argument('--format', help='Report format', choices=parameters['Report Formats'],
                        default='text')
    common.add_argument('--no-cache', help='Bypass the results cache', action='store_true')
    common.add_argument('--runfile', help='YAML run file with default options', type=str, default=None)
    common.add_argument('--verbose', help='Debug logging', action='store_true')
    common.add_argument('--log-file', help='Write logs to this file', type=str, default=None)

    parser = argparse.ArgumentParser(prog='critical-number',
                                     description='Critical numbers of finite abelian groups')
    commands = parser.add_subparsers(dest='command', required=True)

    formula = commands.add_parser('formula', parents=[common], help='Closed-form cr(G)',
                                  epilog=window_epilog())
    formula.add_argument('group', help='Group descriptor, e.g. C91 or C2xC4', type=str)

    oracle = commands.add_parser('oracle', parents=[common], help='Exhaustive cr(G)')
    oracle.add_argument('group', help='Group descriptor', type=str)
    oracle.add_argument('--budget', help='Subset budget per size', type=int, default=None)

    verify = commands.add_parser('verify', parents=[common], help='Check an addition theorem')
    verify.add_argument('theorem', help='Theorem to check', choices=parameters['Theorems'])
    verify.add_argument('--p', help='Prime modulus', type=int, required=True)
    verify.add_argument('--s', help='Number of summands', type=int, default=2)
    modes = verify.add_mutually_exclusive_group()
    modes.add_argument('--exhaustive', help='Every instance', dest='mode', action='store_const',
                       const=EXHAUSTIVE)
    modes.add_argument('--sampled', help='Seeded random instances', dest='mode', action='store_const',
                       const=SAMPLED)
    verify.add_argument('--seed', help='Sampling seed', type=int, default=None)
    verify.add_argument('--samples', help='Sampled instances', type=int, default=None)
    verify.add_argument('--budget', help='Instance budget', type=int, default=None)
    verify.set_defaults(mode=EXHAUSTIVE)

    witness = commands.add_parser('witness', parents=[common], help='Extremal non-spanning set')
    witness.add_argument('group', help='Group descriptor', type=str, nargs='?', default=None)
    witness.add_argument('--p', help='Smallest prime divisor of |G|', type=int, default=None)
    witness.add_argument('--sweep', help='Check every group of order <= N', type=int, default=None)

    certify = commands.add_parser('certify', parents=[common], help='Spanning certificates')
    certify.add_argument('group', help='Group descriptor', type=str)
    sources = certify.add_mutually_exclusive_group(required=True)
    sources.add_argument('--set', help='Comma-separated element indices', type=str, default=None)
    sources.add_argument('--set-file', help='File of element indices', type=str, default=None)
    sources.add_argument('--random', help='Number of seeded random sets', type=int, default=None)
    certify.add_argument('--size', help='Size of random sets (default p + q - 2)', type=int, default=None)
    certify.add_argument('--seed', help='Sampling seed', type=int, default=None)
    certify.add_argument('--method', help='Certification route', choices=parameters['Certify Methods'],
                         default=parameters['Certify']['Default Method'])
    certify.add_argument('--truncate', help='Keep the p + q - 2 lowest elements of a larger set',
                         action='store_true')
    certify.add_argument('--certificate-dir', help='Directory for certificate files', type=str,
                         default=None)

    table = commands.add_parser('table', parents=[common], help='Formula against oracle')
    table.add_argument('--orders', help='Orders such as 3..24 or 3,5,7', type=str, default=None)
    table.add_argument('--max-order', help='Every order from 2 to N', type=int, default=None)
    table.add_argument('--out', help='CSV output path', type=str, default=None)
    table.add_argument('--budget', help='Subset budget per size', type=int, default=None)
    return parser


def runfile_arguments(path):
    runfile = LoadRunfile(path)
    argv = [str(runfile.command)]
    options = runfile.options()
    positional = options.pop('group', None) if 'group' in options else options.pop('theorem', None)
    if positional is not None:
        argv.append(str(positional))
    for key, value in options.items():
        flag = '--' + key.replace('_', '-')
        if value is True:
            argv.append(flag)
        elif value is not False and value is not None:
            argv.extend([flag, str(value)])
    return argv


def parse_arguments(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--runfile', default=None)
    known, remaining = pre.parse_known_args(argv)
    if known.runfile is not None:
        # explicit flags come last, so they override the run file
        argv = runfile_arguments(known.runfile) + remaining
    return argument_parser().parse_args(argv)


def configure_logging(args):
    level = logging.DEBUG if args.verbose else logging.INFO
    if args.log_file:
        logging.basicConfig(format=FORMAT, level=level, filename=args.log_file)
    else:
        logging.basicConfig(format=FORMAT, level=level, stream=sys.stderr)


def echo_parameters(args):
    return {key: value for key, value in sorted(vars(args).items()) if key not in RUN_OPTIONS}


def cmd_formula(args, threads):
    g = parse_group_spec(args.group)
    result = cr_formula(g)
    return RunReport('formula', echo_parameters(args), result.as_dict(),
                     summary=['%s: cr = %d (%s)' % (g.name, result.value, result.case_label)])


def cmd_oracle(args, threads):
    g = parse_group_spec(args.group)
    outcome = cr_bruteforce(g, args.budget, threads)
    summary = ['%s: oracle %d, formula %d (%s)' % (g.name, outcome.value, outcome.formula_value,
                                                   'agree' if outcome.agrees else 'DISAGREE')]
    if outcome.failing_witness is not None:
        summary.append('non-spanning witness of size %d: %s' % (len(outcome.failing_witness),
                                                                outcome.failing_witness.indices()))
    return RunReport('oracle', echo_parameters(args), outcome.as_dict(),
                     PASS if outcome.agrees else FAIL, summary=summary)


def cmd_verify(args, threads):
    verifier = VERIFIERS[args.theorem]
    seed = args.seed if args.mode == SAMPLED else None
    if args.theorem == 'ddsh':
        report = verifier(args.p, args.mode, seed, args.budget, args.samples, threads)
    else:
        report = verifier(args.p, args.s, args.mode, seed, args.budget, args.samples, threads)
    summary = [','.join(REPORT_COLUMNS)]
    summary.extend(','.join('' if row[c] is None else str(row[c]) for c in REPORT_COLUMNS)
                   for row in report.rows())
    return RunReport('verify', echo_parameters(args), report.as_dict(),
                     PASS if report.passed else FAIL, report.seed, summary)


def cmd_witness(args, threads):
    if args.sweep is not None:
        summaries = witness_sweep(args.sweep)
        unsound = [s.group.name for s in summaries if not s.sound]
        summary = ['%d groups of order <= %d checked, %d unsound' % (len(summaries), args.sweep, len(unsound))]
        summary.extend('unsound: %s' % name for name in unsound)
        return RunReport('witness', echo_parameters(args), [s.as_dict() for s in summaries],
                         FAIL if unsound else PASS, summary=summary)
    if args.group is None:
        raise PreconditionError('witness needs a group or --sweep')
    g = parse_group_spec(args.group)
    p = smallest_prime_divisor(g.order) if args.p is None else args.p
    result = summarize_witness(g, p)
    summary = ['%s: %d elements, |Sigma| = %d <= %d, %s' % (
        g.name, len(result.witness), result.closure_size, result.closure_bound,
        'spans' if result.spans else 'non-spanning confirmed')]
    return RunReport('witness', echo_parameters(args), result.as_dict(),
                     PASS if result.sound else FAIL, summary=summary)


def read_set_file(path):
    if not os.path.exists(path):
        raise PreconditionError('Path to %s does not exist' % path)
    indices = []
    with open(path) as f:
        for line in f:
            line = line.split('#', 1)[0]
            indices.extend(token for token in line.replace(',', ' ').split())
    return indices


def _subset_from(g, tokens):
    try:
        indices = [int(token) for token in tokens]
    except ValueError as error:
        raise SubsetError('invalid element list: %s' % error)
    return GroupSubset.from_indices(g, indices)


def _certificate_path(directory, g, subset):
    name = hashlib.sha256(str(subset.indices()).encode()).hexdigest()[:12]
    return os.path.join(directory, 'certificate_%s_%s.txt' % (g.name, name))


def cmd_certify(args, threads):
    g = parse_group_spec(args.group)
    seed = None
    if args.random is not None:
        seed = load_parameters()['Certify']['Default Seed'] if args.seed is None else args.seed
        if args.size is None:
            p, q = window_parameters(g)
            size = p + q - 2
        else:
            size = args.size
        subsets = sample_subsets(g, size, args.random, seed)
    elif args.set is not None:
        subsets = [_subset_from(g, [i for i in args.set.split(',') if i.strip()])]
    else:
        subsets = [_subset_from(g, read_set_file(args.set_file))]
    directory = args.certificate_dir
    if directory is None and args.random is None:
        directory = '.'
    rows, failures = [], 0
    for number, subset in enumerate(subsets):
        row = {'index': number, 'set': subset.indices()}
        tracer_ok = direct_ok = None
        certificate = None
        if args.method in ('tracer', 'both'):
            try:
                certificate = certify_span(subset, args.truncate, threads)
                verdict = validate_certificate(certificate)
                tracer_ok = verdict.passed
                row.update({'case': certificate.case_label, 'tracer': verdict.as_dict(),
                            'trace': certificate.as_dict()})
            except TheoremContradiction as error:
                tracer_ok = False
                row['tracer'] = {'passed': False, 'contradiction': str(error), 'instance': error.instance}
        if args.method in ('dp', 'both'):
            direct = certify_direct(subset)
            direct_ok = validate_certificate(direct).passed
            row['direct'] = {'passed': direct_ok, 'missing': list(direct.missing)}
            if certificate is None:
                certificate = direct
        agree = tracer_ok == direct_ok if args.method == 'both' else True
        row['agree'] = agree
        if directory is not None and certificate is not None:
            os.makedirs(directory, exist_ok=True)
            row['certificate'] = write_certificate(certificate, _certificate_path(directory, g, subset))
        passed = agree and tracer_ok is not False and direct_ok is not False
        failures += 0 if passed else 1
        rows.append(row)
    summary = ['%s: %d/%d sets certified (method %s)' % (g.name, len(rows) - failures, len(rows), args.method)]
    for row in rows:
        if 'certificate' in row:
            summary.append('certificate %s (%s)' % (row['certificate'], row.get('case', 'direct-dp')))
    return RunReport('certify', echo_parameters(args), rows, FAIL if failures else PASS, seed, summary)


def cmd_table(args, threads):
    if args.max_order is not None:
        orders = list(range(2, args.max_order + 1))
    else:
        orders = parse_orders(args.orders or load_parameters()['Table']['Default Orders'])
    rows = cr_table(orders, args.budget, threads)
    if args.out:
        write_table_csv(rows, args.out)
    statuses = [row.status for row in rows]
    if 'mismatch' in statuses:
        verdict = FAIL
    elif 'budget-exceeded' in statuses:
        verdict = BUDGET_EXCEEDED
    else:
        verdict = PASS
    summary = ['%-12s formula %3d  oracle %-16s %s' % (row.group.name, row.formula.value,
                                                     row.as_dict()['oracle'], row.formula.case_label)
               for row in rows]
    summary.append('%d rows, %d agree' % (len(rows), statuses.count('agree')))
    return RunReport('table', echo_parameters(args), [row.as_dict() for row in rows], verdict,
                     summary=summary)


COMMANDS = {'formula': cmd_formula, 'oracle': cmd_oracle, 'verify': cmd_verify,
            'witness': cmd_witness, 'certify': cmd_certify, 'table': cmd_table}


def _group_key(args):
    group = getattr(args, 'group', None)
    if group is None:
        return None
    return parse_group_spec(group).name


def cache_parameters(args):
    """ Report parameters plus the digest of any input file they name """
    parameters = echo_parameters(args)
    set_file = getattr(args, 'set_file', None)
    if set_file is not None and os.path.exists(set_file):
        with open(set_file, 'rb') as f:
            parameters['set_file_sha256'] = hashlib.sha256(f.read()).hexdigest()
    return parameters


def writes_files(args):
    # a cached payload cannot replay these outputs
    if args.command == 'table':
        return bool(args.out)
    if args.command == 'certify':
        return args.certificate_dir is not None or args.random is None
    return False


def run_command(args, threads):
    parameters = echo_parameters(args)
    key = cache_key(args.command, _group_key(args), cache_parameters(args), getattr(args, 'seed', None))
    cache = None if args.no_cache or writes_files(args) else ResultsCache()
    if cache is not None:
        payload = cache.lookup(key)
        if payload is not None:
            return RunReport.from_payload(payload, threads=threads, cached=True)
    try:
        report = COMMANDS[args.command](args, threads)
    except BudgetExceeded as error:
        logger.info('budget exceeded: %s', error)
        report = RunReport(args.command, parameters, {'error': str(error), 'partial': error.partial},
                           BUDGET_EXCEEDED, summary=['budget exceeded: %s' % error])
    except TheoremContradiction as error:
        logger.error('THEOREM CONTRADICTION: %s', error)
        report = RunReport(args.command, parameters, {'error': str(error), 'instance': error.instance},
                           FAIL, summary=['contradiction: %s' % error])
    if cache is not None:
        cache.store(key, report)
    return report


def main(argv=None):
    try:
        args = parse_arguments(argv)
    except CriticalNumberError as error:
        print('error: %s' % error, file=sys.stderr)
        return exit_code('usage')
    configure_logging(args)
    threads = default_threads() if args.threads is None else args.threads
    start = time.perf_counter()
    try:
        report = run_command(args, threads)
    except (GroupSpecError, PreconditionError, SubsetError) as error:
        print('error: %s' % error, file=sys.stderr)
        return exit_code('usage')
    report.wall_time = time.perf_counter() - start
    report.threads = threads
    sys.stdout.write(format_report(report, args.format))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
