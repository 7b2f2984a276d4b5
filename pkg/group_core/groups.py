#!/usr/bin/env python
"""
Finite abelian groups in invariant-factor form. Elements are dense indices
in [0, |G|-1] under the mixed-radix encoding with the first coordinate most
significant, so index 0 is the identity.
"""

import re
import itertools
import logging
from dataclasses import dataclass, field
from functools import reduce, cached_property
from operator import mul

from group_core.exceptions import GroupSpecError
from group_core.numbertheory import (prime_factorization, integer_partitions,
                                     is_prime)

logger = logging.getLogger(__name__)

_CYCLIC_FACTOR = re.compile(r'^c(\d+)$')


def _canonical_factors(factors):
    # any list of cyclic orders -> invariant factors d1 | d2 | ... | dk
    exponents = {}
    for n in factors:
        for prime, exponent in prime_factorization(n).items():
            exponents.setdefault(prime, []).append(exponent)
    if not exponents:
        return ()
    rank = max(len(values) for values in exponents.values())
    invariant = [1] * rank
    for prime, values in exponents.items():
        values = sorted(values)
        # the largest prime powers go to the last invariant factors
        for offset, exponent in enumerate(reversed(values)):
            invariant[rank - 1 - offset] *= prime ** exponent
    return tuple(invariant)


@dataclass(frozen=True)
class GroupSpec:
    invariant_factors: tuple

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, 'invariant_factors', factors)
        for d in factors:
            if d < 2:
                raise GroupSpecError('invariant factor %s is smaller than 2' % d)
        for d, e in zip(factors, factors[1:]):
            if e % d != 0:
                raise GroupSpecError('%s does not divide %s; not in invariant-factor form'
                                     % (d, e))

    @classmethod
    def from_factors(cls, factors):
        for n in factors:
            if int(n) < 2:
                raise GroupSpecError('cyclic factor C%s needs order >= 2' % n)
        return cls(_canonical_factors([int(n) for n in factors]))

    @cached_property
    def order(self):
        return reduce(mul, self.invariant_factors, 1)

    @cached_property
    def weights(self):
        # mixed-radix place values, first coordinate most significant
        weights = []
        place = 1
        for d in reversed(self.invariant_factors):
            weights.append(place)
            place *= d
        return tuple(reversed(weights))

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def is_cyclic(self):
        return self.rank <= 1

    def coords(self, index):
        if not 0 <= index < self.order:
            raise GroupSpecError('element %s out of range for %s' % (index, self.name))
        return tuple((index // w) % d for w, d in zip(self.weights, self.invariant_factors))

    def index_of(self, coords):
        if len(coords) != self.rank:
            raise GroupSpecError('%s needs %d coordinates, got %r' % (self.name, self.rank, coords))
        for c, d in zip(coords, self.invariant_factors):
            if not 0 <= c < d:
                raise GroupSpecError('coordinate %s out of range for C%s' % (c, d))
        return sum(c * w for c, w in zip(coords, self.weights))

    def element(self, index):
        return GroupElement(self, self._check(index))

    def add(self, i, j):
        # index-level addition; the hot path of every engine
        total = 0
        for w, d in zip(self.weights, self.invariant_factors):
            total += (((i // w) + (j // w)) % d) * w
        return total

    def negate(self, i):
        total = 0
        for w, d in zip(self.weights, self.invariant_factors):
            total += ((-(i // w)) % d) * w
        return total

    def subtract(self, i, j):
        return self.add(i, self.negate(j))

    def multiple(self, k, i):
        total = 0
        for w, d in zip(self.weights, self.invariant_factors):
            total += ((k * (i // w)) % d) * w
        return total

    def _check(self, index):
        if not isinstance(index, int) or not 0 <= index < self.order:
            raise GroupSpecError('element %r out of range for %s' % (index, self.name))
        return index

    @property
    def name(self):
        if not self.invariant_factors:
            return 'C1'
        return 'x'.join('C%d' % d for d in self.invariant_factors)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class GroupElement:
    group: GroupSpec = field(repr=False)
    index: int

    @property
    def coords(self):
        return self.group.coords(self.index)

    @property
    def is_identity(self):
        return self.index == 0

    def __add__(self, other):
        return group_add(self.group, self, other)

    def __neg__(self):
        return group_negate(self.group, self)

    def __int__(self):
        return self.index


@dataclass(frozen=True)
class Subgroup:
    """
    A subgroup with one coset representative per coset, identity first.
    coset_of[i] is the position in coset_reps of the coset containing i.
    """
    group: GroupSpec = field(repr=False)
    member_set: object = field(repr=False)
    index: int
    coset_reps: tuple
    coset_of: tuple = field(repr=False)

    @property
    def order(self):
        return self.group.order // self.index

    def __contains__(self, element):
        return int(element) in self.member_set

    def coset_members(self, coset):
        return [i for i, c in enumerate(self.coset_of) if c == coset]


def parse_group_spec(text):
    """
    "C91", "C2xC4", "c3 x c3" or a bare integer n meaning C_n; canonicalised
    to invariant factors.
    """
    if not isinstance(text, str):
        raise GroupSpecError('group descriptor must be a string, got %r' % (text,))
    cleaned = text.strip().lower().replace(' ', '')
    if not cleaned:
        raise GroupSpecError('empty group descriptor')
    if cleaned.isdigit():
        n = int(cleaned)
        if n < 1:
            raise GroupSpecError('group order must be >= 1, got %s' % n)
        return GroupSpec.from_factors([n]) if n > 1 else GroupSpec(())
    factors = []
    for part in cleaned.split('x'):
        match = _CYCLIC_FACTOR.match(part)
        if match is None:
            raise GroupSpecError('malformed group descriptor %r' % text)
        n = int(match.group(1))
        if n < 2:
            raise GroupSpecError('cyclic factor C%s in %r needs order >= 2' % (n, text))
        factors.append(n)
    return GroupSpec.from_factors(factors)


def group_add(g, a, b):
    return GroupElement(g, g.add(g._check(int(a)), g._check(int(b))))


def group_negate(g, a):
    return GroupElement(g, g.negate(g._check(int(a))))


def enumerate_abelian_groups(n):
    # one GroupSpec per isomorphism class of order n
    if n < 1:
        raise GroupSpecError('group order must be >= 1, got %s' % n)
    if n == 1:
        return [GroupSpec(())]
    per_prime = []
    for prime, exponent in sorted(prime_factorization(n).items()):
        per_prime.append([(prime, partition) for partition in integer_partitions(exponent)])
    groups = set()
    for choice in itertools.product(*per_prime):
        factors = []
        for prime, partition in choice:
            factors.extend(prime ** part for part in partition)
        groups.add(GroupSpec(_canonical_factors(factors)))
    return sorted(groups, key=lambda g: (g.rank, g.invariant_factors))


def subgroup_of_index_p(g, p):
    """
    Kernel of the surjection G -> C_p reading the last coordinate mod p. Since
    d1 | ... | dk, p divides dk whenever it divides |G|, and because the last
    coordinate is least significant the map is simply index mod p. The coset
    representatives are therefore 0, 1, ..., p-1.
    """
    from sumset_engine.subsets import GroupSubset

    if not is_prime(p):
        raise GroupSpecError('%s is not prime' % p)
    if g.order % p != 0:
        raise GroupSpecError('%s does not divide |%s| = %s' % (p, g.name, g.order))
    coset_of = tuple(i % p for i in range(g.order))
    members = GroupSubset.from_indices(g, [i for i in range(g.order) if coset_of[i] == 0])
    logger.debug('subgroup of index %s in %s has %s elements', p, g.name, len(members))
    return Subgroup(g, members, p, tuple(GroupElement(g, i) for i in range(p)), coset_of)


def quotient_project(g, h, a):
    # position of the coset a + H among h.coset_reps
    return h.coset_of[g._check(int(a))]
