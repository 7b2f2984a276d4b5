#!/usr/bin/env python
"""
Quotient-level construction sets. For a decomposition with quotient G/H = Z/p
(coset of i is i mod p) the progressions A_i, the two-point sets of the
singleton blocks and the pair-block set D must add up to all of Z/p; each
way of writing a class as d + a_1 + ... translates into coefficients f_i.
"""

import logging
from dataclasses import dataclass, field

from group_core.exceptions import PreconditionError
from group_core.groups import GroupSpec
from sumset_engine.subsets import GroupSubset, iter_bits, kernel_for
from sumset_engine.sumsets import is_arithmetic_progression, sumset_bits

logger = logging.getLogger(__name__)

FULL_PROGRESSIONS = 'lemma-4.3'
TRIMMED_FIRST = 'lemma-4.7'
VARIANTS = (FULL_PROGRESSIONS, TRIMMED_FIRST)


@dataclass(frozen=True)
class ConstructionSets:
    """
    a_sets[i] maps each quotient class of A_i to the coefficients k giving
    it; a_blocks[i] is the block A_i was built from. d_set maps each class of
    D to the pair block whose coefficient drops to 0, or None for b0 itself.
    """
    p: int
    variant: str
    a_sets: tuple
    a_blocks: tuple
    d_set: dict = field(compare=False)
    b0: int = 0
    differences: tuple = ()

    @property
    def quotient(self):
        return GroupSpec((self.p,))

    def a_subsets(self):
        return tuple(GroupSubset.from_indices(self.quotient, a_set) for a_set in self.a_sets)

    def d_subset(self):
        return GroupSubset.from_indices(self.quotient, self.d_set)


def build_construction_sets(dec, variant=FULL_PROGRESSIONS):
    if variant not in VARIANTS:
        raise PreconditionError('unknown construction variant %s' % variant)
    if variant == TRIMMED_FIRST and (dec.t == 0 or dec.blocks[0].size < 4):
        raise PreconditionError('%s needs a first block with at least 4 elements' % variant)
    p = dec.p
    a_sets, a_blocks, differences = [], [], []
    for i in range(dec.t + dec.r):
        block = dec.blocks[i]
        if i < dec.t:
            trimmed = variant == TRIMMED_FIRST and i == 0
            ks = range(2, block.size - 1) if trimmed else range(1, block.size)
            differences.append(block.coset)
        else:
            ks = (0, 1)
        classes = {}
        for k in ks:
            classes.setdefault(k * block.coset % p, []).append(k)
        a_sets.append({c: tuple(classes[c]) for c in sorted(classes)})
        a_blocks.append(i)
    # b0 is the quotient sum of the pair-block cosets; b0 - b_j drops block j
    b0 = sum(dec.blocks[j].coset for j in dec.pair_blocks) % p
    d_set = {b0: None}
    for j in dec.pair_blocks:
        d_set[(b0 - dec.blocks[j].coset) % p] = j
    return ConstructionSets(p, variant, tuple(a_sets), tuple(a_blocks), d_set, b0, tuple(differences))


def progression_hypothesis(cs):
    """
    True iff every A_i built from a large block is a progression with
    difference a_i + H and those differences are nonzero and pairwise distinct.
    """
    subsets = cs.a_subsets()
    for subset, difference in zip(subsets, cs.differences):
        if difference == 0 or not is_arithmetic_progression(subset, difference):
            return False
    return len(set(cs.differences)) == len(cs.differences)


@dataclass(frozen=True)
class CoverChoice:
    d_choice: object
    a_coefficients: tuple


@dataclass(frozen=True)
class CoverVerdict:
    covers: bool
    choices: dict = field(compare=False)
    missed: tuple = ()


def _cover_stages(cs):
    kernel = kernel_for(cs.quotient)
    stage = 0
    for c in cs.d_set:
        stage |= 1 << c
    stages = [stage]
    for a_set in cs.a_sets:
        stage = sumset_bits(kernel, stage, a_set)
        stages.append(stage)
    return stages


def iter_cover_choices(cs, target, stages=None):
    """ Every decomposition target = d + a_1 + ... + a_m, depth first """
    p = cs.p
    stages = _cover_stages(cs) if stages is None else stages
    if not (stages[-1] >> target) & 1:
        return

    def walk(i, y, picks):
        if i == 0:
            if y in cs.d_set:
                yield CoverChoice(cs.d_set[y], tuple(reversed(picks)))
            return
        for c, ks in cs.a_sets[i - 1].items():
            rest = (y - c) % p
            if (stages[i - 1] >> rest) & 1:
                for k in ks:
                    picks.append(k)
                    yield from walk(i - 1, rest, picks)
                    picks.pop()

    yield from walk(len(cs.a_sets), target, [])


def quotient_cover_check(cs, p=None, accept=None):
    """
    Whether D + A_1 + ... covers Z/p, with one accepted decomposition per
    class; classes with no (accepted) decomposition are reported as missed.
    """
    p = cs.p if p is None else p
    stages = _cover_stages(cs)
    choices, missed = {}, []
    for target in range(p):
        for choice in iter_cover_choices(cs, target, stages):
            if accept is None or accept(choice):
                choices[target] = choice
                break
        else:
            missed.append(target)
    if missed:
        logger.info('construction %s misses quotient classes %s', cs.variant, missed)
    return CoverVerdict(not missed, choices, tuple(missed))


def coefficients_for(dec, cs, choice):
    coefficients = [0] * dec.s
    for position, k in zip(cs.a_blocks, choice.a_coefficients):
        coefficients[position] = k
    for j in dec.pair_blocks:
        coefficients[j] = 0 if choice.d_choice == j else 1
    return tuple(coefficients)


def quotient_subset_sum(p, classes, target):
    """
    Positions J (possibly empty) with sum of classes[J] = target mod p, or
    None when the target is out of reach.
    """
    kernel = kernel_for(GroupSpec((p,)))
    snapshots = [1]
    for c in classes:
        snapshots.append(snapshots[-1] | kernel.translate(snapshots[-1], c % p))
    target %= p
    if not (snapshots[-1] >> target) & 1:
        return None
    chosen = []
    for j in range(len(classes), 0, -1):
        if (snapshots[j - 1] >> target) & 1:
            continue
        chosen.append(j - 1)
        target = (target - classes[j - 1]) % p
    return sorted(chosen)


def covered_classes(cs):
    return list(iter_bits(_cover_stages(cs)[-1]))
