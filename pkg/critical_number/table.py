#!/usr/bin/env python

import csv
import logging
from dataclasses import dataclass

from group_core.exceptions import BudgetExceeded
from group_core.groups import GroupSpec, enumerate_abelian_groups
from critical_number.formula import CrResult, cr_formula
from critical_number.oracle import cr_bruteforce

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['order', 'group', 'formula', 'case_label', 'oracle', 'agree', 'witness_size']


@dataclass(frozen=True)
class TableRow:
    group: GroupSpec
    formula: CrResult
    oracle: int = None
    status: str = 'skipped'
    witness_size: int = None

    @property
    def agree(self):
        if self.oracle is None:
            return None
        return self.oracle == self.formula.value

    def as_dict(self):
        return {'order': self.group.order, 'group': self.group.name,
                'formula': self.formula.value, 'case_label': self.formula.case_label,
                'oracle': self.oracle if self.oracle is not None else self.status,
                'agree': self.agree, 'witness_size': self.witness_size}


def parse_orders(text):
    # "3..24", "7" or "3,5,7"
    text = str(text).strip()
    if '..' in text:
        low, high = text.split('..', 1)
        return list(range(int(low), int(high) + 1))
    return [int(part) for part in text.split(',') if part.strip()]


def cr_table(orders, budget=None, threads=1):
    rows = []
    for n in orders:
        for g in enumerate_abelian_groups(n):
            formula = cr_formula(g)
            if g.order < 2:
                rows.append(TableRow(g, formula))
                continue
            try:
                outcome = cr_bruteforce(g, budget, threads)
            except BudgetExceeded as error:
                logger.info('%s: oracle over budget (%s)', g.name, error)
                rows.append(TableRow(g, formula, None, 'budget-exceeded'))
                continue
            witness_size = len(outcome.failing_witness) if outcome.failing_witness is not None else None
            status = 'agree' if outcome.value == formula.value else 'mismatch'
            if status == 'mismatch':
                logger.error('FORMULA/ORACLE MISMATCH for %s: formula %d, oracle %d',
                             g.name, formula.value, outcome.value)
            rows.append(TableRow(g, formula, outcome.value, status, witness_size))
    return rows


def write_table_csv(rows, path):
    with open(path, 'w', newline='') as outfile:
        writer = csv.DictWriter(outfile, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.as_dict())
