#!/usr/bin/env python
"""
Bit-packed subsets of a finite abelian group. Bit i of a Python integer is
set iff element i is a member, so unions, intersections and translations are
word-parallel big-integer operations.
"""

import functools

from group_core.exceptions import SubsetError


class TranslationKernel:
    """
    Translation by an element as a composition of per-coordinate rotations.
    Rotating coordinate i by c moves the members whose coordinate is below
    d_i - c up by c*w_i and wraps the rest down by (d_i - c)*w_i.
    """

    def __init__(self, group):
        self.group = group
        self.full = (1 << group.order) - 1
        self.cyclic = group.is_cyclic
        self._keep = []
        for weight, d in zip(group.weights, group.invariant_factors):
            level = [0] * d
            for i in range(group.order):
                level[(i // weight) % d] |= 1 << i
            keep = {}
            below = 0
            for c in range(d - 1, 0, -1):
                # members with coordinate < d - c
                below |= level[d - c - 1]
                keep[c] = below
            self._keep.append(keep)
        self._steps = {}

    def steps(self, element):
        steps = self._steps.get(element)
        if steps is None:
            steps = []
            for axis, (weight, d) in enumerate(zip(self.group.weights, self.group.invariant_factors)):
                c = (element // weight) % d
                if c:
                    steps.append((c * weight, (d - c) * weight, self._keep[axis][c]))
            steps = tuple(steps)
            self._steps[element] = steps
        return steps

    def translate(self, bits, element):
        if element == 0 or bits == 0:
            return bits
        if self.cyclic:
            n = self.group.order
            return ((bits << element) & self.full) | (bits >> (n - element))
        for up, down, keep in self.steps(element):
            bits = ((bits & keep) << up) | ((bits & ~keep) >> down)
        return bits


@functools.lru_cache(maxsize=64)
def kernel_for(group):
    return TranslationKernel(group)


def translate_bits(group, bits, element):
    return kernel_for(group).translate(bits, element)


def iter_bits(bits):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits):
    return bin(bits).count('1')


class GroupSubset:
    """ Immutable bit-packed subset of `group` """

    __slots__ = ('group', 'bits', 'cardinality')

    def __init__(self, group, bits=0):
        if bits < 0 or bits >> group.order:
            raise SubsetError('bit array has members outside %s' % group.name)
        object.__setattr__(self, 'group', group)
        object.__setattr__(self, 'bits', bits)
        object.__setattr__(self, 'cardinality', popcount(bits))

    def __setattr__(self, name, value):
        raise AttributeError('GroupSubset is immutable')

    def __reduce__(self):
        return (GroupSubset, (self.group, self.bits))

    @classmethod
    def from_indices(cls, group, indices):
        bits = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < group.order:
                raise SubsetError('element %s out of range for %s' % (i, group.name))
            bits |= 1 << i
        return cls(group, bits)

    @classmethod
    def empty(cls, group):
        return cls(group, 0)

    @classmethod
    def full(cls, group):
        return cls(group, (1 << group.order) - 1)

    @classmethod
    def singleton(cls, group, element):
        return cls.from_indices(group, [element])

    def __contains__(self, element):
        element = int(element)
        return 0 <= element < self.group.order and (self.bits >> element) & 1 == 1

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return self.cardinality

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return (isinstance(other, GroupSubset) and self.group == other.group
                and self.bits == other.bits)

    def __hash__(self):
        return hash((self.group, self.bits))

    def __repr__(self):
        return 'GroupSubset(%s, %s)' % (self.group.name, self.indices())

    def _same_group(self, other):
        if self.group != other.group:
            raise SubsetError('subsets live in different groups: %s and %s'
                              % (self.group.name, other.group.name))

    def __or__(self, other):
        self._same_group(other)
        return GroupSubset(self.group, self.bits | other.bits)

    def __and__(self, other):
        self._same_group(other)
        return GroupSubset(self.group, self.bits & other.bits)

    def __sub__(self, other):
        self._same_group(other)
        return GroupSubset(self.group, self.bits & ~other.bits)

    def issubset(self, other):
        self._same_group(other)
        return self.bits & ~other.bits == 0

    def is_full(self):
        return self.cardinality == self.group.order

    def indices(self):
        return list(iter_bits(self.bits))

    def translate(self, element):
        return GroupSubset(self.group, translate_bits(self.group, self.bits, int(element)))

    def negation(self):
        return GroupSubset.from_indices(self.group, [self.group.negate(i) for i in self])

    def total(self):
        # sum of all members
        total = 0
        for i in self:
            total = self.group.add(total, i)
        return total

    def add(self, element):
        return GroupSubset(self.group, self.bits | (1 << int(element)))

    def discard(self, element):
        return GroupSubset(self.group, self.bits & ~(1 << int(element)))
