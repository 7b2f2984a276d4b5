#!/usr/bin/env python
"""
Closed-form critical number. Clause precedence: |G| <= 2 first, then prime
order, the exception list, the oracle corrections, the odd-prime window and
finally the general value |G|/p + p - 2 (with the Theorem 1.1 window as its
own label). C9 is an oracle correction: {1,3,4,7} misses 0, so cr(C9) = 5.
"""

from dataclasses import dataclass

from configuration.settings import exception_groups, oracle_corrections
from group_core.groups import GroupSpec
from group_core.numbertheory import (smallest_prime_divisor, floor_two_sqrt,
                                     is_prime)

PRIME_ORDER = 'prime-order'
EXCEPTION_LIST = 'exception-list'
ODD_PRIME_WINDOW = 'odd-prime-window'
THEOREM_WINDOW = 'theorem-1.1-window'
GENERAL = 'general'
TRIVIAL = 'order-at-most-2'
# exhaustive value, missing from the published exception list
ORACLE_CORRECTION = 'oracle-correction'

CASE_LABELS = (TRIVIAL, PRIME_ORDER, EXCEPTION_LIST, ODD_PRIME_WINDOW,
               THEOREM_WINDOW, GENERAL, ORACLE_CORRECTION)


@dataclass(frozen=True)
class CrResult:
    group: GroupSpec
    value: int
    case_label: str
    p: int

    def as_dict(self):
        return {'group': self.group.name, 'order': self.group.order,
                'value': self.value, 'case_label': self.case_label, 'p': self.p}


def in_theorem_window(p, q):
    return p + floor_two_sqrt(p - 2) + 1 < q < 2 * p


def cr_formula(g):
    n = g.order
    if n <= 2:
        return CrResult(g, max(n, 1), TRIVIAL, n if n == 2 else 1)
    p = smallest_prime_divisor(n)
    if n == p:
        return CrResult(g, floor_two_sqrt(p - 2), PRIME_ORDER, p)
    cofactor = n // p
    if g.invariant_factors in exception_groups():
        return CrResult(g, cofactor + p - 1, EXCEPTION_LIST, p)
    if g.invariant_factors in oracle_corrections():
        return CrResult(g, cofactor + p - 1, ORACLE_CORRECTION, p)
    if cofactor % 2 == 1 and is_prime(cofactor):
        q = cofactor
        if 2 < p < q <= p + floor_two_sqrt(p - 2) + 1:
            return CrResult(g, cofactor + p - 1, ODD_PRIME_WINDOW, p)
        if in_theorem_window(p, q):
            return CrResult(g, p + q - 2, THEOREM_WINDOW, p)
    return CrResult(g, cofactor + p - 2, GENERAL, p)
