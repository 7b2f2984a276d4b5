#!/usr/bin/env python
"""
The classical lower-bound construction S = (H\\{0}) u {h_1, ..., h_{p-2}}
with H of index p and the h_i in one nonzero coset. Sigma(S) stays inside
H u (h_1+H) u ... u ((p-2)h_1+H), so |Sigma(S)| <= (p-1)|H| < |G|.
"""

import logging
from dataclasses import dataclass

from group_core.exceptions import PreconditionError
from group_core.groups import GroupSpec, subgroup_of_index_p
from group_core.numbertheory import smallest_prime_divisor
from sumset_engine.subsets import GroupSubset
from sumset_engine.sumsets import sigma

logger = logging.getLogger(__name__)


def extremal_witness(g, p):
    if g.order < 2 or p != smallest_prime_divisor(g.order):
        raise PreconditionError('%s is not the smallest prime divisor of |%s|' % (p, g.name))
    if g.order == p:
        raise PreconditionError('|%s| = p: no index-p construction exists' % g.name)
    h = subgroup_of_index_p(g, p)
    first_outside = next(i for i in range(g.order) if i not in h.member_set)
    coset = h.coset_of[first_outside]
    extra = h.coset_members(coset)[:p - 2]
    if len(extra) < p - 2:
        raise PreconditionError('coset %s holds fewer than p - 2 = %s elements' % (coset, p - 2))
    return GroupSubset(g, h.member_set.bits & ~1) | GroupSubset.from_indices(g, extra)


@dataclass(frozen=True)
class ExtremalSummary:
    group: GroupSpec
    p: int
    witness: GroupSubset
    closure_size: int
    closure_bound: int
    spans: bool

    @property
    def lower_bound(self):
        # cr(G) >= |S| + 1 whenever S fails to span
        return len(self.witness) + 1

    @property
    def sound(self):
        return not self.spans and self.closure_size <= self.closure_bound

    def as_dict(self):
        return {'group': self.group.name, 'p': self.p,
                'witness': self.witness.indices(), 'witness_size': len(self.witness),
                'closure_size': self.closure_size, 'closure_bound': self.closure_bound,
                'spans': self.spans, 'lower_bound': self.lower_bound}


def summarize_witness(g, p):
    witness = extremal_witness(g, p)
    closure = sigma(witness)
    summary = ExtremalSummary(g, p, witness, len(closure), (p - 1) * (g.order // p),
                              closure.is_full())
    logger.debug('extremal witness in %s: |S| = %d, |Sigma(S)| = %d', g.name,
                 len(witness), summary.closure_size)
    return summary


def witness_sweep(max_order):
    """ Soundness of the construction for every group of order <= max_order """
    from group_core.groups import enumerate_abelian_groups

    summaries = []
    for n in range(2, max_order + 1):
        p = smallest_prime_divisor(n)
        if n == p:
            continue
        for g in enumerate_abelian_groups(n):
            summaries.append(summarize_witness(g, p))
    return summaries
