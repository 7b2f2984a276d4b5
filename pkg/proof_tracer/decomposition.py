#!/usr/bin/env python
"""
Coset decomposition of S against a subgroup H of prime index: S0 = S n H and
one block S_i = S n (a_i + H) per nonzero coset met by S. Blocks of size at
least 3 come first (largest first), then singletons, then pairs.
"""

import logging
from dataclasses import dataclass

from group_core.exceptions import SubsetError
from group_core.groups import Subgroup, quotient_project
from sumset_engine.subsets import GroupSubset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    representative: int
    members: GroupSubset
    coset: int

    @property
    def size(self):
        return len(self.members)


@dataclass(frozen=True)
class CosetDecomposition:
    subgroup: Subgroup
    subset: GroupSubset
    s0: GroupSubset
    blocks: tuple
    t: int
    r: int
    u: int

    @property
    def group(self):
        return self.subset.group

    @property
    def s(self):
        return self.t + self.r + self.u

    @property
    def p(self):
        return self.subgroup.index

    @property
    def q(self):
        return self.subgroup.order

    @property
    def block_sizes(self):
        return tuple(block.size for block in self.blocks)

    @property
    def classes(self):
        return tuple(block.coset for block in self.blocks)

    @property
    def pair_blocks(self):
        return range(self.t + self.r, self.s)

    def accounting_holds(self):
        large = sum(block.size for block in self.blocks[:self.t])
        return len(self.s0) + large + self.r + 2 * self.u == len(self.subset)

    def counts(self):
        return {'s0': len(self.s0), 't': self.t, 'r': self.r, 'u': self.u, 's': self.s}


def coset_decompose(subset, subgroup):
    g = subset.group
    if subgroup.group != g:
        raise SubsetError('subgroup of %s used with a subset of %s' % (subgroup.group.name, g.name))
    if 0 in subset:
        raise SubsetError('S must avoid the identity')
    by_coset = {}
    for i in subset:
        by_coset.setdefault(quotient_project(g, subgroup, i), []).append(i)
    s0 = GroupSubset.from_indices(g, by_coset.pop(0, []))
    blocks = [Block(members[0], GroupSubset.from_indices(g, members), coset)
              for coset, members in by_coset.items()]
    large = sorted((b for b in blocks if b.size >= 3), key=lambda b: (-b.size, b.representative))
    singles = sorted((b for b in blocks if b.size == 1), key=lambda b: b.representative)
    pairs = sorted((b for b in blocks if b.size == 2), key=lambda b: b.representative)
    dec = CosetDecomposition(subgroup, subset, s0, tuple(large + singles + pairs),
                             len(large), len(singles), len(pairs))
    logger.debug('decomposition of a %d-set in %s: %s', len(subset), g.name, dec.counts())
    return dec


def collapse_of(dec, coefficients):
    """ Sum of |S_i| - 1 over the collapsed coefficients f_i in {0, |S_i|} """
    coefficients = tuple(coefficients)
    if len(coefficients) != dec.s:
        raise SubsetError('%d coefficients for %d blocks' % (len(coefficients), dec.s))
    collapse = 0
    for f, size in zip(coefficients, dec.block_sizes):
        if not 0 <= f <= size:
            raise SubsetError('coefficient %s outside [0, %s]' % (f, size))
        if f in (0, size):
            collapse += size - 1
    return collapse


def fiber_bound_holds(dec, collapse):
    # (p+q-2) + max{1, |S0|-1} - C - s >= q forces a fiber of at least q elements
    p, q = dec.p, dec.q
    return (p + q - 2) + max(1, len(dec.s0) - 1) - collapse - dec.s >= q
