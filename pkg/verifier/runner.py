#!/usr/bin/env python3
"""
Higher Energies Toolkit - Suite Runner
Runs registered checks on seeded instances across worker threads and collects reports
"""

import time
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

import config
from errors import CapExceededError, EXIT_FAILURE, EXIT_OK
from verifier.instances import derive_seed
from verifier.registry import get_check, ratio, select
from verifier.report_log import CheckReport, ReportWriter, FAIL, PASS, REPORTED, summarize

logger = logging.getLogger('verifier.runner')


@dataclass
class SuiteResult:
    """Reports in submission order plus the per-check summary"""

    reports: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def failures(self):
        return [r for r in self.reports if r.failed]

    @property
    def exit_code(self):
        return EXIT_FAILURE if self.failures else EXIT_OK


def _sort_key(value):
    return float('inf') if value is None else value


def _pick(spec, pairs):
    """The pair that decides the verdict: the first failing pair, otherwise the largest ratio"""
    if not pairs:
        raise ValueError(f"Check {spec.name} produced no comparisons")
    worst, worst_ratio = None, None
    for lhs, rhs in pairs:
        r = ratio(lhs, rhs)
        if spec.relation.holds(lhs, rhs) is False:
            return lhs, rhs, r, False
        if worst is None or _sort_key(r) > _sort_key(worst_ratio):
            worst, worst_ratio = (lhs, rhs), r
    return worst[0], worst[1], worst_ratio, spec.relation.holds(*worst)


def run_check(spec, seed, instance=None):
    """Build (or reuse) an instance from the seed, evaluate it and judge the relation"""
    if instance is None:
        instance = spec.make(np.random.default_rng(seed))
    witness = {'check': spec.name, 'seed': seed, 'instance': instance}
    start = time.perf_counter()
    try:
        lhs, rhs, r, held = _pick(spec, spec.evaluate(instance))
    except CapExceededError:
        raise
    except Exception as e:
        logger.error(f"Check {spec.name} raised on seed {seed}: {e}")
        elapsed = (time.perf_counter() - start) * 1000
        witness['error'] = f"{type(e).__name__}: {e}"
        return CheckReport(spec.name, spec.reference, seed, None, None, None, FAIL, elapsed, witness)
    elapsed = (time.perf_counter() - start) * 1000

    if held is None:
        verdict = REPORTED
    else:
        verdict = PASS if held else FAIL
    return CheckReport(spec.name, spec.reference, seed, lhs, rhs, r, verdict, elapsed,
                       witness if verdict == FAIL else None)


def replay(witness):
    """Re-run a check on the instance stored in a failure witness"""
    spec = get_check(witness['check'])
    return run_check(spec, witness['seed'], witness['instance'])


def run_suite(pattern='*', trials=config.DEFAULT_TRIALS, seed=config.DEFAULT_SEED, out=None, stream=None,
              timings=False, threads=None):
    """Run every check matching the glob `trials` times; reports reach the writer in submission order"""
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    specs = select(pattern)
    tasks = [(spec, derive_seed(seed, spec.name, trial)) for spec in specs for trial in range(trials)]
    threads = config.THREADS if threads is None else max(1, int(threads))
    logger.info(f"Running {len(specs)} checks x {trials} trials ({len(tasks)} tasks, {threads} threads)")

    writer = ReportWriter(out, stream, timings)
    result = SuiteResult()
    try:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run_check, spec, task_seed) for spec, task_seed in tasks]
            for future in futures:
                report = future.result()
                writer.record(report)
                result.reports.append(report)
    finally:
        writer.stop()

    result.summary = summarize(result.reports)
    logger.info(f"Suite finished: {len(result.reports)} reports, {len(result.failures)} failures")
    return result
