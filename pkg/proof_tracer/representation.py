#!/usr/bin/env python
"""
Representations x + H = f_1(a_1+H) + ... + f_s(a_s+H) and their fibers
(Sigma(S0) u {0}) + Sigma_{f_1}(S_1) + ... + Sigma_{f_s}(S_s) inside x + H.
"""

import logging
from dataclasses import dataclass

from group_core.exceptions import SubsetError, TheoremContradiction
from group_core.numbertheory import floor_two_sqrt
from sumset_engine.subsets import GroupSubset, iter_bits, kernel_for
from sumset_engine.sumsets import (RestrictedWitnessTable, sigma, sigma_witness,
                                   sumset_bits)
from proof_tracer.construction import (FULL_PROGRESSIONS, TRIMMED_FIRST,
                                       build_construction_sets, coefficients_for,
                                       iter_cover_choices, quotient_subset_sum)
from proof_tracer.decomposition import collapse_of

logger = logging.getLogger(__name__)

DOUBLED_ROUTE = 'lemma-4.2'


@dataclass(frozen=True)
class Representation:
    target: int
    coefficients: tuple
    collapse: int
    route: str = FULL_PROGRESSIONS

    def congruence_holds(self, dec):
        total = sum(f * c for f, c in zip(self.coefficients, dec.classes))
        return sum(self.coefficients) > 0 and total % dec.p == dec.subgroup.coset_of[self.target]

    def as_dict(self):
        return {'target': self.target, 'coefficients': list(self.coefficients),
                'collapse': self.collapse, 'route': self.route}


def _make(dec, x, coefficients, route):
    return Representation(x, tuple(coefficients), collapse_of(dec, coefficients), route)


def _doubled_representations(dec, x):
    # all large blocks at 1 or 2, everything else at 1: collapse 0
    p = dec.p
    large = dec.classes[:dec.t]
    offset = (dec.subgroup.coset_of[x] - sum(dec.classes)) % p
    chosen = quotient_subset_sum(p, large, offset)
    if chosen is None:
        return
    coefficients = [1] * dec.s
    for i in chosen:
        coefficients[i] = 2
    yield _make(dec, x, coefficients, DOUBLED_ROUTE)


def iter_representations(dec, x, max_collapse=1, variant=FULL_PROGRESSIONS):
    """
    Representations of x + H produced by the doubling route (when there are
    at least floor(2 sqrt(p-2)) large blocks) and by the construction-set
    cover, with collapse at most max_collapse. Under the trimmed variant the
    first coefficient also stays in [2, |S_1| - 2].
    """
    x = int(x)
    p = dec.p
    if dec.t >= floor_two_sqrt(p - 2):
        candidates = list(_doubled_representations(dec, x))
    else:
        candidates = []
    cs = build_construction_sets(dec, variant)
    first_size = dec.blocks[0].size if dec.s else 0
    seen = set()

    def admissible(rep):
        if rep.coefficients in seen or rep.collapse > max_collapse:
            return False
        if not rep.congruence_holds(dec):
            return False
        if variant == TRIMMED_FIRST and not 2 <= rep.coefficients[0] <= first_size - 2:
            return False
        return True

    for rep in candidates:
        if admissible(rep):
            seen.add(rep.coefficients)
            yield rep
    for choice in iter_cover_choices(cs, dec.subgroup.coset_of[x]):
        rep = _make(dec, x, coefficients_for(dec, cs, choice), variant)
        if admissible(rep):
            seen.add(rep.coefficients)
            yield rep


def find_representation(dec, x, max_collapse=1, variant=FULL_PROGRESSIONS):
    for rep in iter_representations(dec, x, max_collapse, variant):
        return rep
    raise TheoremContradiction('no representation of %s + H with collapse <= %s'
                               % (int(x), max_collapse),
                               {'x': int(x), 'max_collapse': max_collapse, 'variant': variant,
                                'blocks': dec.block_sizes, 'classes': dec.classes})


class FiberTable:
    """
    Shared per-decomposition tables: Sigma(S0) u {0} and the restricted
    sumset layers of every block, with witness backtracking.
    """

    def __init__(self, dec):
        self.dec = dec
        self.group = dec.group
        self.kernel = kernel_for(self.group)
        self.base = sigma(dec.s0).bits | 1
        self.tables = [RestrictedWitnessTable(block.members) for block in dec.blocks]

    def stages(self, coefficients):
        stage = self.base
        stages = [stage]
        for table, f in zip(self.tables, coefficients):
            stage = sumset_bits(self.kernel, stage, iter_bits(table.layer_bits(f)))
            stages.append(stage)
        return stages

    def fiber(self, rep):
        return GroupSubset(self.group, self.stages(rep.coefficients)[-1])

    def witness(self, rep, x):
        """ A nonempty I in S summing to x with x in the fiber of rep, or None """
        stages = self.stages(rep.coefficients)
        if not (stages[-1] >> x) & 1:
            return None
        chosen = []
        for i in range(len(self.tables), 0, -1):
            f = rep.coefficients[i - 1]
            table = self.tables[i - 1]
            for y in iter_bits(table.layer_bits(f)):
                rest = self.group.subtract(x, y)
                if (stages[i - 1] >> rest) & 1:
                    chosen.extend(table.witness(f, y))
                    x = rest
                    break
            else:
                raise SubsetError('fiber stages are inconsistent')
        if x != 0:
            chosen.extend(sigma_witness(self.dec.s0, x))
        if not chosen:
            raise SubsetError('empty witness for a representation with positive coefficients')
        return sorted(chosen)


def fiber_cover(dec, rep, table=None):
    """
    The fiber of rep. It always lies in x + H; with at least q = |H|
    elements it is the whole coset.
    """
    table = FiberTable(dec) if table is None else table
    fiber = table.fiber(rep)
    coset = dec.subgroup.coset_of[rep.target]
    stray = [i for i in fiber if dec.subgroup.coset_of[i] != coset]
    if stray:
        raise TheoremContradiction('fiber of %s leaves its coset at %s' % (rep.target, stray[:5]),
                                   {'representation': rep.as_dict(), 'stray': stray})
    return fiber
