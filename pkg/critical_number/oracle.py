#!/usr/bin/env python
"""
Exhaustive critical-number oracle. Subsets of G\\{0} are enumerated in
colexicographic order by a depth-first walk that fixes the largest element
first, so Sigma closures of shared prefixes are computed once and a prefix
whose closure is already G settles all of its completions.
"""

import math
import logging
from dataclasses import dataclass, field

from configuration.settings import load_parameters
from group_core.exceptions import BudgetExceeded, CriticalNumberError
from group_core.groups import GroupSpec
from group_core.numbertheory import smallest_prime_divisor
from sumset_engine.parallel import run_sharded
from sumset_engine.subsets import GroupSubset, kernel_for
from sumset_engine.sumsets import extend_sigma_bits, sigma
from critical_number.formula import cr_formula

logger = logging.getLogger(__name__)


def default_budget():
    return load_parameters()['Oracle']['Subset Budget']


@dataclass(frozen=True)
class SpanVerdict:
    group: GroupSpec
    size: int
    spans: bool
    counterexample: GroupSubset = None
    checked: int = 0


@dataclass
class OracleOutcome:
    group: GroupSpec
    value: int
    failing_witness: GroupSubset
    sizes_checked: dict = field(default_factory=dict)
    formula_value: int = None
    route: str = 'guided'

    @property
    def agrees(self):
        return self.formula_value is None or self.formula_value == self.value

    def as_dict(self):
        return {'group': self.group.name, 'value': self.value,
                'formula': self.formula_value, 'agree': self.agrees,
                'route': self.route,
                'failing_witness': self.failing_witness.indices() if self.failing_witness is not None else None,
                'sizes_checked': {int(k): int(v) for k, v in sorted(self.sizes_checked.items())}}


def _scan_shard(shard):
    # shard = (invariant factors, size, largest element); module level so it pickles
    factors, size, top = shard
    group = GroupSpec(factors)
    kernel = kernel_for(group)
    full = kernel.full
    chosen = [top]
    checked = 0

    def walk(reach, picks, limit):
        nonlocal checked
        if reach == full:
            checked += math.comb(limit - 1, picks)
            return None
        if picks == 0:
            checked += 1
            return sorted(chosen)
        for element in range(picks, limit):
            chosen.append(element)
            found = walk(extend_sigma_bits(kernel, reach, element), picks - 1, element)
            chosen.pop()
            if found is not None:
                return found
        return None

    counterexample = walk(extend_sigma_bits(kernel, 0, top), size - 1, top)
    return checked, counterexample


def spanning_all_of_size(g, size, budget=None, threads=1):
    """
    True iff every size-element subset of G\\{0} spans G; otherwise the first
    counterexample in colex order.
    """
    n = g.order
    if size < 1:
        raise CriticalNumberError('subset size must be >= 1, got %s' % size)
    if size > n - 1:
        # no subsets of this size: vacuously spanning
        return SpanVerdict(g, size, True, None, 0)
    budget = default_budget() if budget is None else budget
    total = math.comb(n - 1, size)
    if total > budget:
        raise BudgetExceeded('C(%d, %d) = %d subsets exceed the budget %d'
                             % (n - 1, size, total, budget),
                             {'size': size, 'subsets': total, 'budget': budget})
    logger.info('scanning %d subsets of size %d in %s', total, size, g.name)
    shards = [(g.invariant_factors, size, top) for top in range(size, n)]
    checked = 0
    if threads is not None and threads <= 1:
        for shard in shards:
            shard_checked, counterexample = _scan_shard(shard)
            checked += shard_checked
            if counterexample is not None:
                return SpanVerdict(g, size, False, GroupSubset.from_indices(g, counterexample), checked)
        return SpanVerdict(g, size, True, None, checked)
    results = run_sharded(_scan_shard, shards, threads)
    for shard_checked, counterexample in results:
        checked += shard_checked
        if counterexample is not None:
            return SpanVerdict(g, size, False, GroupSubset.from_indices(g, counterexample), checked)
    return SpanVerdict(g, size, True, None, checked)


def _extremal_candidate(g, size):
    # the extremal construction, when it has exactly `size` elements
    from critical_number.extremal import extremal_witness

    p = smallest_prime_divisor(g.order)
    if g.order == p:
        return None
    witness = extremal_witness(g, p)
    if len(witness) != size or sigma(witness).is_full():
        return None
    return witness


def _unguided(g, budget, threads, sizes_checked):
    previous = None
    for size in range(1, g.order + 1):
        try:
            verdict = spanning_all_of_size(g, size, budget, threads)
        except BudgetExceeded as error:
            error.partial.update({'lower_bound': size, 'group': g.name})
            raise
        sizes_checked[size] = verdict.checked
        if verdict.spans:
            return size, previous
        previous = verdict.counterexample
    raise CriticalNumberError('no spanning size found for %s' % g.name)


def cr_bruteforce(g, budget=None, threads=1, extremal_first=None):
    """
    Exhaustive cr(G). The formula only steers the search: the confirm step at
    the predicted size is a full scan and any contradiction falls back to an
    unguided sweep from size 1.
    """
    if g.order < 2:
        raise CriticalNumberError('the oracle needs |G| >= 2')
    if extremal_first is None:
        extremal_first = load_parameters()['Oracle']['Extremal First']
    predicted = cr_formula(g).value
    sizes_checked = {}
    witness = None
    if predicted - 1 >= 1:
        if extremal_first:
            witness = _extremal_candidate(g, predicted - 1)
            if witness is not None:
                logger.info('extremal construction witnesses size %d in %s', predicted - 1, g.name)
                sizes_checked[predicted - 1] = 1
        if witness is None:
            verdict = spanning_all_of_size(g, predicted - 1, budget, threads)
            sizes_checked[predicted - 1] = verdict.checked
            witness = verdict.counterexample
    try:
        confirm = spanning_all_of_size(g, predicted, budget, threads)
    except BudgetExceeded as error:
        error.partial.update({'group': g.name, 'lower_bound': predicted if witness is not None else None,
                              'witness': witness.indices() if witness is not None else None,
                              'witness_size': len(witness) if witness is not None else None})
        raise
    sizes_checked[predicted] = confirm.checked
    if confirm.spans and (witness is not None or predicted == 1):
        return OracleOutcome(g, predicted, witness, sizes_checked, predicted, 'guided')
    logger.warning('formula steering contradicted for %s; running unguided search', g.name)
    value, witness = _unguided(g, budget, threads, sizes_checked)
    return OracleOutcome(g, value, witness, sizes_checked, predicted, 'unguided')
