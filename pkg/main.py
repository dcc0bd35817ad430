#!/usr/bin/env python3
"""
Higher Energies Toolkit - Main Entry Point
Provides a command-line interface for instance generation, single computations and the verifier
"""

import sys
import json
import logging
import argparse

import config
import serialization
from constructions import heilbronn_sum
from energy import (EnergyValue, critical_parameters, energy_alpha, energy_k, energy_kl, mult_energy, sigma_k, t_k)
from errors import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, ToolkitError, exit_code_for
from group import make_group
from harmonic import DenseFn, autocorrelation, dft
from sets import GSet, diffset, higher_diff, iterated, magnification_ratio, sumset
from spectral import DIFFERENCE, SUM, build_op, spectrum
from verifier.instances import KINDS, gen_instance
from verifier.registry import all_checks
from verifier.report_log import read_reports, summarize
from verifier.runner import run_suite

# Configure logging
logging.basicConfig(
    level=config.LOG_LEVEL,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    filename=config.LOG_FILE
)
logger = logging.getLogger('main')

COMPUTE_KINDS = ('energy', 'energy-kl', 'energy-alpha', 't-k', 'sigma-k', 'mult-energy', 'sumset', 'diffset',
                 'higher-diff', 'magnification', 'critical', 'spectrum', 'heilbronn-sum')
WEIGHTS = ('autocorr', 'diff', 'sum', 'dft-of')


def parse_arguments(argv=None):
    """Parse command-line arguments"""
    parser = argparse.ArgumentParser(
        description='Higher Energies Toolkit: higher sumsets, energies and spectra over finite abelian groups',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  main.py gen random_set --n 64 --m 8 --seed 1     - Emit a random 8-subset of Z/64
  main.py compute --set A.json --kind energy --k 3 - E_3 of the set in A.json
  main.py compute --group 64 --elements 0,1,2      - E(A) of a set given inline
  main.py spectrum --set A.json --weight autocorr  - Spectrum of T^{A o A}_A
  main.py verify --filter 'heilbronn*' --trials 5  - Run the Heilbronn checks
  main.py report reports.jsonl                     - Summarize a report file
"""
    )

    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    # Gen command
    gen_parser = subparsers.add_parser('gen', help='Emit an instance as JSON')
    gen_parser.add_argument('kind', choices=KINDS, help='Instance kind')
    gen_parser.add_argument('--seed', type=int, default=config.DEFAULT_SEED, help='Random seed')
    gen_parser.add_argument('--n', type=int, help='Group order (random_set) or size (convex)')
    gen_parser.add_argument('--m', type=int, help='Set size (random_set)')
    gen_parser.add_argument('--p', type=int, help='Prime (subgroup, residues, heilbronn)')
    gen_parser.add_argument('--t', type=int, help='Subgroup order (subgroup)')
    gen_parser.add_argument('--shape', choices=('squares', 'cubes', 'random'), help='Convex shape')
    gen_parser.add_argument('--out', help='Write to FILE instead of stdout')

    # Compute command
    compute_parser = subparsers.add_parser('compute', help='Compute one quantity')
    _add_set_arguments(compute_parser)
    compute_parser.add_argument('--kind', choices=COMPUTE_KINDS, default='energy', help='Quantity to compute')
    compute_parser.add_argument('--k', type=int, help='First order parameter')
    compute_parser.add_argument('--l', type=int, help='Second order parameter')
    compute_parser.add_argument('--alpha', type=float, help='Exponent for energy-alpha')
    compute_parser.add_argument('--p', type=int, help='Prime for heilbronn-sum')
    compute_parser.add_argument('--a', type=int, default=1, help='Frequency for heilbronn-sum')

    # Verify command
    verify_parser = subparsers.add_parser('verify', help='Run the verification suite')
    verify_parser.add_argument('--filter', default='*', help='Glob over check names')
    verify_parser.add_argument('--trials', type=int, default=config.DEFAULT_TRIALS, help='Trials per check')
    verify_parser.add_argument('--seed', type=int, default=config.DEFAULT_SEED, help='Master seed')
    verify_parser.add_argument('--out', help='Write JSON Lines reports to FILE')
    verify_parser.add_argument('--timings', action='store_true', default=config.REPORT_TIMINGS,
                               help='Add elapsed_ms to every report')
    verify_parser.add_argument('--threads', type=int, help='Worker threads')
    verify_parser.add_argument('--list', action='store_true', help='List registered checks and exit')

    # Spectrum command
    spectrum_parser = subparsers.add_parser('spectrum', help='Spectrum of a weighted operator on a set')
    _add_set_arguments(spectrum_parser)
    spectrum_parser.add_argument('--weight', nargs='+', default=['autocorr'], metavar='WEIGHT',
                                 help='autocorr | diff | sum | dft-of SETFILE')

    # Report command
    report_parser = subparsers.add_parser('report', help='Summarize a JSON Lines report file')
    report_parser.add_argument('path', help='Report file')

    return parser.parse_args(argv)


def _add_set_arguments(parser):
    parser.add_argument('--set', dest='set_file', help='Set document (JSON)')
    parser.add_argument('--group', help='Group factors, e.g. 64 or 4,8 (with --elements)')
    parser.add_argument('--elements', help='Comma-separated element indices (with --group)')


def _parse_ints(text):
    return [int(v) for v in text.split(',') if v.strip()]


def load_set(args):
    """The GSet named by --set, or by --group and --elements"""
    if args.set_file:
        A = serialization.load_file(args.set_file)
        if not isinstance(A, GSet):
            raise ValueError(f"{args.set_file} does not hold a set")
        return A
    if args.group is None:
        raise ValueError("Give --set FILE or --group with --elements")
    group = make_group(_parse_ints(args.group))
    return GSet.from_elements(group, _parse_ints(args.elements or ''))


def _emit(doc, out=None):
    text = json.dumps(doc, separators=(',', ':'))
    if out:
        with open(out, 'w') as handle:
            handle.write(text + '\n')
    else:
        print(text)


def generate(args):
    """Emit one instance"""
    params = {name: getattr(args, name) for name in ('n', 'm', 'p', 't', 'shape') if getattr(args, name) is not None}
    _emit(gen_instance(args.kind, args.seed, **params), args.out)
    return EXIT_OK


def compute(args):
    """Compute one quantity and print it as JSON"""
    if args.kind == 'heilbronn-sum':
        if args.p is None:
            raise ValueError("heilbronn-sum needs --p")
        value = heilbronn_sum(args.p, args.a)
        _emit({'kind': 'S', 'p': args.p, 'a': args.a, 'value': [value.real, value.imag], 'abs': abs(value)})
        return EXIT_OK

    A = load_set(args)
    k = args.k if args.k is not None else 2
    if args.kind == 'energy':
        doc = EnergyValue('E_k', energy_k(A, k), (k,)).to_json()
    elif args.kind == 'energy-kl':
        l = args.l if args.l is not None else 2
        doc = EnergyValue('E_kl', energy_kl(A, k, l), (k, l)).to_json()
    elif args.kind == 'energy-alpha':
        if args.alpha is None:
            raise ValueError("energy-alpha needs --alpha")
        doc = EnergyValue('E_alpha', energy_alpha(A, args.alpha), (args.alpha,)).to_json()
    elif args.kind == 't-k':
        doc = EnergyValue('T_k', t_k(A, k), (k,)).to_json()
    elif args.kind == 'sigma-k':
        doc = EnergyValue('sigma_k', sigma_k(A, k), (k,)).to_json()
    elif args.kind == 'mult-energy':
        doc = EnergyValue('E_mult', mult_energy(A, A)).to_json()
    elif args.kind == 'sumset':
        # kA - lA
        doc = iterated(k, args.l or 0, A).to_json()
    elif args.kind == 'diffset':
        doc = diffset(A, A).to_json()
    elif args.kind == 'higher-diff':
        T = higher_diff([A] * k, A)
        doc = {'arity': T.arity, 'size': len(T)}
    elif args.kind == 'magnification':
        R, X = magnification_ratio(A, A)
        doc = {'ratio': str(R), 'value': float(R), 'witness': X.to_json()}
    elif args.kind == 'critical':
        K, M = critical_parameters(A)
        doc = {'K': float(K), 'M': float(M)}
    else:
        doc = spectrum(build_op(A, autocorrelation(A))).to_json()
    _emit(doc)
    return EXIT_OK


def weight_operator(A, weight):
    """HermOp for a --weight specification"""
    kind = weight[0]
    if kind not in WEIGHTS:
        raise ValueError(f"Unknown weight {kind}; choose from {', '.join(WEIGHTS)}")
    if kind == 'dft-of':
        if len(weight) != 2:
            raise ValueError("dft-of needs a set file")
        S = serialization.load_file(weight[1])
        return build_op(A, dft(DenseFn.indicator(S)))
    if len(weight) != 1:
        raise ValueError(f"Weight {kind} takes no argument")
    if kind == 'autocorr':
        return build_op(A, autocorrelation(A))
    if kind == 'diff':
        return build_op(A, DenseFn.indicator(diffset(A, A)), DIFFERENCE)
    return build_op(A, DenseFn.indicator(sumset(A, A)), SUM)


def show_spectrum(args):
    """Print the spectrum of T^g_A"""
    A = load_set(args)
    _emit(spectrum(weight_operator(A, args.weight)).to_json())
    return EXIT_OK


def _print_summary(summary, stream):
    def fmt(value):
        return '-' if value is None else f"{value:.6g}"

    print(f"{'check':<28} {'count':>6} {'fail':>5} {'rep':>5} {'min ratio':>12} {'max ratio':>12}", file=stream)
    for name, entry in summary.items():
        print(f"{name:<28} {entry['count']:>6} {entry['failures']:>5} {entry['reported']:>5} "
              f"{fmt(entry['min_ratio']):>12} {fmt(entry['max_ratio']):>12}", file=stream)


def verify(args):
    """Run the suite; reports go to --out or stdout, the summary to stdout or stderr"""
    if args.list:
        for spec in all_checks():
            print(f"{spec.name:<28} {spec.area:<14} {spec.relation}  {spec.reference}")
        return EXIT_OK
    stream = None if args.out else sys.stdout
    result = run_suite(args.filter, args.trials, args.seed, out=args.out, stream=stream, timings=args.timings,
                       threads=args.threads)
    _print_summary(result.summary, sys.stdout if args.out else sys.stderr)
    if result.failures:
        logger.error(f"{len(result.failures)} check executions failed")
    return result.exit_code


def report(args):
    """Summarize a report file"""
    reports = read_reports(args.path)
    _print_summary(summarize(reports), sys.stdout)
    failures = sum(1 for r in reports if r.failed)
    print(f"\n{len(reports)} reports, {failures} failures")
    return EXIT_FAILURE if failures else EXIT_OK


def main(argv=None):
    """Main entry point"""
    args = parse_arguments(argv)

    if not args.command:
        # If no command provided, show help
        print("Please specify a command. Use --help for more information.", file=sys.stderr)
        return EXIT_USAGE

    commands = {
        'gen': generate,
        'compute': compute,
        'verify': verify,
        'spectrum': show_spectrum,
        'report': report,
    }
    try:
        return commands[args.command](args)
    except (ToolkitError, ValueError, KeyError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
