#!/usr/bin/env python3
"""
Higher Energies Toolkit - Report Log
Check reports, a queued JSON Lines writer and the per-check summary
"""

import json
import time
import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction

logger = logging.getLogger('verifier.report_log')

PASS = 'pass'
FAIL = 'fail'
REPORTED = 'reported'


def _jsonable(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    if isinstance(value, complex):
        return float(value.real)
    return float(value)


@dataclass
class CheckReport:
    """One check execution"""

    check: str
    reference: str
    seed: int
    lhs: object
    rhs: object
    ratio: object
    verdict: str
    elapsed_ms: float = None
    witness: dict = field(default=None, repr=False)

    @property
    def failed(self):
        return self.verdict == FAIL

    def to_json(self, timings=False):
        """Report record with the exchange field names, in a fixed order"""
        record = {
            'check': self.check,
            'paper_ref': self.reference,
            'seed': self.seed,
            'lhs': _jsonable(self.lhs),
            'rhs': _jsonable(self.rhs),
            'ratio': _jsonable(self.ratio),
            'verdict': self.verdict,
        }
        if timings and self.elapsed_ms is not None:
            record['elapsed_ms'] = round(self.elapsed_ms, 3)
        if self.witness is not None:
            record['witness'] = self.witness
        return record

    @classmethod
    def from_json(cls, record):
        return cls(record['check'], record.get('paper_ref', ''), record['seed'], record['lhs'], record['rhs'],
                   record.get('ratio'), record['verdict'], record.get('elapsed_ms'), record.get('witness'))


class ReportWriter:
    """Queues reports and flushes them as JSON Lines from a background thread"""

    def __init__(self, path=None, stream=None, timings=False, flush_interval=1.0):
        """Initialize the writer; with neither path nor stream reports are kept in memory only"""
        self.path = path
        self.stream = stream
        self.timings = timings
        self.flush_interval = flush_interval
        self.log_queue = []
        self.queue_lock = threading.Lock()
        self.write_lock = threading.Lock()
        self.reports = []
        self.handle = open(path, 'w') if path else None

        self.running = True
        self.flush_thread = threading.Thread(target=self._background_flush)
        self.flush_thread.daemon = True
        self.flush_thread.start()

        logger.info(f"Report writer started ({path or 'stream' if stream else 'memory'})")

    def record(self, report):
        """Queue a report for writing"""
        with self.queue_lock:
            self.log_queue.append(report)
            self.reports.append(report)
        if report.failed:
            logger.warning(f"Check {report.check} failed at seed {report.seed}")

    def flush_logs(self):
        """Write queued reports in arrival order"""
        with self.write_lock:
            with self.queue_lock:
                if not self.log_queue:
                    return 0
                pending = self.log_queue.copy()
                self.log_queue = []

            # serialize outside the queue lock
            lines = [json.dumps(r.to_json(self.timings), separators=(',', ':')) for r in pending]
            for target in (self.handle, self.stream):
                if target is not None:
                    target.write('\n'.join(lines) + '\n')
                    target.flush()
            return len(pending)

    def _background_flush(self):
        """Periodically flush queued reports"""
        while self.running:
            try:
                time.sleep(self.flush_interval)
                self.flush_logs()
            except Exception as e:
                logger.error(f"Error in background flush thread: {e}")

    def stop(self):
        """Stop the flush thread, flush what remains and close the file"""
        self.running = False
        if self.flush_thread.is_alive():
            self.flush_thread.join(timeout=5)
        self.flush_logs()
        if self.handle is not None:
            self.handle.close()
            self.handle = None
        logger.info(f"Report writer stopped after {len(self.reports)} reports")

    def summary(self):
        return summarize(self.reports)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.stop()
        return False


def summarize(reports):
    """Per-check count, failures and min/max ratio (the tightness leaderboard)"""
    table = {}
    for report in reports:
        entry = table.setdefault(report.check, {'count': 0, 'failures': 0, 'reported': 0,
                                                'min_ratio': None, 'max_ratio': None})
        entry['count'] += 1
        if report.verdict == FAIL:
            entry['failures'] += 1
        elif report.verdict == REPORTED:
            entry['reported'] += 1
        if report.ratio is not None:
            value = float(report.ratio)
            entry['min_ratio'] = value if entry['min_ratio'] is None else min(entry['min_ratio'], value)
            entry['max_ratio'] = value if entry['max_ratio'] is None else max(entry['max_ratio'], value)
    return {name: table[name] for name in sorted(table)}


def read_reports(path):
    """Load CheckReports from a JSON Lines file"""
    reports = []
    with open(path) as handle:
        for number, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                reports.append(CheckReport.from_json(json.loads(line)))
            except (ValueError, KeyError) as e:
                raise ValueError(f"{path}:{number}: malformed report ({e})")
    return reports
