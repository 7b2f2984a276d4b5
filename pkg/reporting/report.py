#!/usr/bin/env python
"""
Run reports. The payload (command, parameters, seed, version, verdict and
outcome) is deterministic; wall time, start time and worker count live only
in the header line.
"""

import json
import hashlib
import datetime
from dataclasses import dataclass, field

import yaml

from configuration.settings import exit_code, load_parameters
from reporting.rendering import render

PASS = 'pass'
FAIL = 'fail'
BUDGET_EXCEEDED = 'budget-exceeded'
VERDICTS = (PASS, FAIL, BUDGET_EXCEEDED)

_VERDICT_EXIT = {PASS: 'success', FAIL: 'disagreement', BUDGET_EXCEEDED: 'budget'}


def tool_version():
    return load_parameters()['Version']


def canonical_json(record):
    return json.dumps(record, sort_keys=True, separators=(',', ':'))


@dataclass
class RunReport:
    command: str
    parameters: dict
    outcome: object
    verdict: str = PASS
    seed: int = None
    summary: list = field(default_factory=list)
    version: str = field(default_factory=tool_version)
    started: datetime.datetime = field(default_factory=datetime.datetime.now)
    wall_time: float = 0.0
    threads: int = 1
    cached: bool = False

    def payload(self):
        return {'command': self.command, 'parameters': self.parameters, 'seed': self.seed,
                'version': self.version, 'verdict': self.verdict, 'outcome': self.outcome,
                'summary': list(self.summary)}

    def digest(self):
        return hashlib.sha256(canonical_json(self.payload()).encode()).hexdigest()

    def header_line(self):
        line = 'critical-number %s | started %s | wall %.3fs | threads %d' % (
            self.version, self.started.isoformat(timespec='seconds'), self.wall_time, self.threads)
        return line + (' | cached' if self.cached else '')

    def exit_code(self):
        return exit_code(_VERDICT_EXIT[self.verdict])

    @classmethod
    def from_payload(cls, payload, **header):
        return cls(payload['command'], payload['parameters'], payload['outcome'],
                   payload['verdict'], payload['seed'], payload.get('summary', []),
                   payload['version'], **header)


def format_report(report, fmt='text'):
    if fmt == 'json':
        # JSON lines: header object, then the payload
        return '%s\n%s\n' % (canonical_json({'header': report.header_line()}),
                             canonical_json(report.payload()))
    if fmt == 'yaml':
        return '# %s\n%s' % (report.header_line(),
                             yaml.safe_dump(report.payload(), default_flow_style=False, sort_keys=True))
    if fmt == 'text':
        keywords = {'header': report.header_line(), 'command': report.command,
                    'parameters': sorted(report.parameters.items()), 'verdict': report.verdict,
                    'digest': report.digest(), 'summary': report.summary}
        return render('report', keywords)
    raise ValueError('unknown report format %s' % fmt)
