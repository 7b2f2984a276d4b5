#!/usr/bin/env python

from collections import Counter
from dataclasses import dataclass, field

from sumset_engine.subsets import iter_bits

REPORT_COLUMNS = ['theorem', 'p', 's', 'mode', 'instances', 'violations', 'min_slack', 'seed']


def describe_masks(masks, **extra):
    record = {'sets': [list(iter_bits(mask)) for mask in masks]}
    record.update(extra)
    return record


@dataclass
class BoundReport:
    """
    Outcome of one bound-verification run. violations must be empty; each
    entry carries the exact failing instance.
    """
    theorem_id: str
    p: int
    s: int = None
    mode: str = 'exhaustive'
    seed: int = None
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    slack_histogram: Counter = field(default_factory=Counter)
    tight_instance: dict = None
    observations: Counter = field(default_factory=Counter)
    sub_reports: list = field(default_factory=list)

    def record(self, actual, bound, masks, **extra):
        # instances are only described when they are kept
        slack = actual - bound
        self.instances_checked += 1
        self.slack_histogram[slack] += 1
        if slack < 0:
            self.violations.append(describe_masks(masks, actual=actual, bound=bound, **extra))
        elif slack == 0 and self.tight_instance is None:
            self.tight_instance = describe_masks(masks, actual=actual, bound=bound, **extra)

    def merge(self, other):
        # additive; the earliest tight instance in shard order wins
        self.instances_checked += other.instances_checked
        self.violations.extend(other.violations)
        self.slack_histogram.update(other.slack_histogram)
        self.observations.update(other.observations)
        if self.tight_instance is None:
            self.tight_instance = other.tight_instance
        return self

    @property
    def min_slack(self):
        if not self.slack_histogram:
            return None
        return min(self.slack_histogram)

    @property
    def all_violations(self):
        violations = list(self.violations)
        for report in self.sub_reports:
            violations.extend(report.all_violations)
        return violations

    @property
    def passed(self):
        return not self.all_violations

    def rows(self):
        return [self.as_row()] + [row for report in self.sub_reports for row in report.rows()]

    def as_row(self):
        return {'theorem': self.theorem_id, 'p': self.p, 's': self.s, 'mode': self.mode,
                'instances': self.instances_checked, 'violations': len(self.violations),
                'min_slack': self.min_slack, 'seed': self.seed}

    def as_dict(self):
        record = self.as_row()
        record['slack_histogram'] = {int(k): int(v) for k, v in sorted(self.slack_histogram.items())}
        record['tight_instance'] = self.tight_instance
        record['violation_instances'] = self.violations
        record['observations'] = {k: int(v) for k, v in sorted(self.observations.items())}
        record['sub_reports'] = [report.as_dict() for report in self.sub_reports]
        return record
