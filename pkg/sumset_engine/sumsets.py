#!/usr/bin/env python
"""
Sumsets A+B, restricted sumsets Sigma_k(A), the closure Sigma(A) and witness
extraction. Everything runs over the full bit array of the group.
"""

import logging
from dataclasses import dataclass

from group_core.exceptions import SubsetError
from sumset_engine.subsets import GroupSubset, kernel_for

logger = logging.getLogger(__name__)


def _require_nonempty(*subsets):
    for subset in subsets:
        if not subset:
            raise SubsetError('sumset operands must be nonempty')


def sumset_bits(kernel, a_bits, b_elements):
    result = 0
    for element in b_elements:
        result |= kernel.translate(a_bits, element)
    return result


def sumset(a, b):
    a._same_group(b)
    _require_nonempty(a, b)
    if len(b) > len(a):
        a, b = b, a
    return GroupSubset(a.group, sumset_bits(kernel_for(a.group), a.bits, b))


def iterated_sumset(sets):
    sets = list(sets)
    if not sets:
        raise SubsetError('iterated_sumset needs at least one set')
    result = sets[0]
    _require_nonempty(result)
    for subset in sets[1:]:
        result = sumset(result, subset)
    return result


@dataclass(frozen=True)
class RestrictedSumsetTable:
    source: GroupSubset
    layers: tuple

    def layer(self, k):
        return self.layers[k]

    def union(self):
        # Sigma(A) as the union of layers 1..|A|
        bits = 0
        for layer in self.layers[1:]:
            bits |= layer.bits
        return GroupSubset(self.source.group, bits)


def restricted_layers_bits(kernel, elements):
    # layers[k] after processing `elements`, updated high k to low k
    layers = [1] + [0] * len(elements)
    for count, element in enumerate(elements, start=1):
        for k in range(count, 0, -1):
            layers[k] |= kernel.translate(layers[k - 1], element)
    return layers


def restricted_sumsets(a):
    _require_nonempty(a)
    layers = restricted_layers_bits(kernel_for(a.group), a.indices())
    return RestrictedSumsetTable(a, tuple(GroupSubset(a.group, bits) for bits in layers))


def extend_sigma_bits(kernel, reach, element):
    return reach | kernel.translate(reach, element) | (1 << element)


def sigma_bits(kernel, elements):
    reach = 0
    for element in elements:
        reach = extend_sigma_bits(kernel, reach, element)
    return reach


def sigma(a):
    return GroupSubset(a.group, sigma_bits(kernel_for(a.group), a))


def sigma_snapshots(kernel, elements):
    # snapshots[j] is Sigma of the first j elements
    snapshots = [0]
    for element in elements:
        snapshots.append(extend_sigma_bits(kernel, snapshots[-1], element))
    return snapshots


def backtrack_sigma(group, elements, snapshots, x):
    chosen = []
    for j in range(len(elements), 0, -1):
        if (snapshots[j - 1] >> x) & 1:
            continue
        element = elements[j - 1]
        chosen.append(element)
        if x == element:
            return chosen
        x = group.subtract(x, element)
    raise SubsetError('sigma snapshots are inconsistent')


def sigma_witness(a, x):
    """
    A nonempty subset of `a` summing to x, or None when x is not in Sigma(a).
    """
    x = int(x)
    elements = a.indices()
    snapshots = sigma_snapshots(kernel_for(a.group), elements)
    if not (snapshots[-1] >> x) & 1:
        return None
    return GroupSubset.from_indices(a.group, backtrack_sigma(a.group, elements, snapshots, x))


class RestrictedWitnessTable:
    """
    Prefix tables prefix[j][k] = Sigma_k of the first j members, so any
    element of Sigma_k(A) can be traced back to a k-subset.
    """

    def __init__(self, subset, max_k=None):
        self.subset = subset
        self.group = subset.group
        self.elements = subset.indices()
        kernel = kernel_for(self.group)
        top = len(self.elements) if max_k is None else min(max_k, len(self.elements))
        layers = [1] + [0] * top
        self.prefix = [tuple(layers)]
        for count, element in enumerate(self.elements, start=1):
            for k in range(min(count, top), 0, -1):
                layers[k] |= kernel.translate(layers[k - 1], element)
            self.prefix.append(tuple(layers))

    def layer_bits(self, k):
        if k > len(self.prefix[-1]) - 1:
            return 0
        return self.prefix[-1][k]

    def witness(self, k, x):
        if not (self.layer_bits(k) >> x) & 1:
            return None
        chosen = []
        for j in range(len(self.elements), 0, -1):
            if k == 0:
                break
            if (self.prefix[j - 1][k] >> x) & 1:
                continue
            element = self.elements[j - 1]
            chosen.append(element)
            x = self.group.subtract(x, element)
            k -= 1
        if k != 0 or x != 0:
            raise SubsetError('restricted sumset prefix tables are inconsistent')
        return chosen


def restricted_sumset_witness(a, k, x):
    # a k-subset of `a` summing to x, or None
    if not 0 <= k <= len(a):
        raise SubsetError('k = %s outside [0, %s]' % (k, len(a)))
    chosen = RestrictedWitnessTable(a, k).witness(k, int(x))
    if chosen is None:
        return None
    return GroupSubset.from_indices(a.group, chosen)


def is_arithmetic_progression(a, d):
    """ True iff a = {a0 + nu*d | nu in [0, |a|-1]} for some a0 """
    group = a.group
    d = int(d)
    if len(a) <= 1:
        return len(a) == 1
    if d == 0:
        return False
    starts = [x for x in a if group.subtract(x, d) not in a]
    if not starts:
        # a is a union of cosets of <d>; an AP only if it is exactly one
        order = 1
        y = d
        while y != 0:
            y = group.add(y, d)
            order += 1
        return len(a) == order
    if len(starts) > 1:
        return False
    # walk the progression from its unique start
    length = 0
    x = starts[0]
    while x in a and length < len(a):
        length += 1
        x = group.add(x, d)
    return length == len(a)


def detect_ap(a):
    """
    Some difference d with a an AP of difference d, or None. Singletons return
    the identity; two-element sets return (second - first) in index order.
    """
    if not a:
        raise SubsetError('detect_ap needs a nonempty set')
    members = a.indices()
    if len(members) == 1:
        return 0
    if len(members) == 2:
        return a.group.subtract(members[1], members[0])
    for d in range(1, a.group.order):
        if is_arithmetic_progression(a, d):
            return d
    return None
