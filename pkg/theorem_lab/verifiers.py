#!/usr/bin/env python
"""
Exhaustive and seeded-random checks of the three addition theorems over
Z/p: Cauchy-Davenport, Diderrich (arithmetic progressions with distinct
differences plus one exceptional set) and Dias da Silva-Hamidoune.
Instances are packed as bit masks over Z/p and folded with the cyclic
translation kernel.
"""

import math
import itertools
import logging

import numpy as np

from configuration.settings import load_parameters
from group_core.exceptions import BudgetExceeded, GroupSpecError, PreconditionError
from group_core.groups import GroupSpec
from group_core.numbertheory import is_prime
from sumset_engine.parallel import run_sharded
from sumset_engine.subsets import iter_bits, kernel_for, popcount
from sumset_engine.sumsets import restricted_layers_bits, sigma_bits, sumset_bits
from theorem_lab.bounds import BoundReport

logger = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'
MODES = (EXHAUSTIVE, SAMPLED)

CAUCHY_DAVENPORT = 'cauchy-davenport'
DIDERRICH = 'diderrich'
DDSH_BOUND = 'ddsh-1'
DDSH_SPANNING = 'ddsh-2'

SHARDS_PER_RUN = 64


def _lab_parameters():
    return load_parameters()['Theorem Lab']


def _check_arguments(p, mode):
    if not is_prime(p):
        raise GroupSpecError('%s is not prime' % p)
    if mode not in MODES:
        raise PreconditionError('mode must be one of %s, got %s' % (', '.join(MODES), mode))


def _check_budget(theorem, p, count, budget):
    budget = _lab_parameters()['Instance Budget'] if budget is None else budget
    if count > budget:
        raise BudgetExceeded('%s over Z/%d needs %d instances, budget is %d'
                             % (theorem, p, count, budget),
                             {'theorem': theorem, 'p': p, 'instances': count, 'budget': budget})


def _cyclic_kernel(p):
    return kernel_for(GroupSpec((p,)))


def _chunks(items, pieces):
    items = list(items)
    size = max(1, math.ceil(len(items) / pieces))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _ranges(lo, hi, pieces):
    step = max(1, math.ceil((hi - lo) / pieces))
    return [(start, min(start + step, hi)) for start in range(lo, hi, step)]


def _fold_bits(kernel, masks):
    bits = masks[0]
    for mask in masks[1:]:
        bits = sumset_bits(kernel, bits, iter_bits(mask))
    return bits


def _random_mask(rng, p):
    # uniform over the nonempty subsets of Z/p
    while True:
        mask = 0
        for i in np.flatnonzero(rng.integers(0, 2, size=p)):
            mask |= 1 << int(i)
        if mask:
            return mask


def _random_subset_mask(rng, population, size):
    mask = 0
    for i in rng.choice(population, size=size, replace=False):
        mask |= 1 << int(i)
    return mask


def _merge(reports, into):
    for report in reports:
        into.merge(report)
    return into


# Cauchy-Davenport: |A_1 + ... + A_s| >= min{p, sum |A_i| - s + 1}

def _record_cauchy_davenport(report, kernel, p, masks):
    actual = popcount(_fold_bits(kernel, masks))
    bound = min(p, sum(popcount(mask) for mask in masks) - len(masks) + 1)
    report.record(actual, bound, masks)


def _cauchy_davenport_exhaustive_shard(shard):
    p, s, lo, hi = shard
    kernel = _cyclic_kernel(p)
    report = BoundReport(CAUCHY_DAVENPORT, p, s, EXHAUSTIVE)
    for first in range(lo, hi):
        for rest in itertools.product(range(1, kernel.full + 1), repeat=s - 1):
            _record_cauchy_davenport(report, kernel, p, (first,) + rest)
    return report


def _cauchy_davenport_sampled_shard(shard):
    p, s, instances = shard
    kernel = _cyclic_kernel(p)
    report = BoundReport(CAUCHY_DAVENPORT, p, s, SAMPLED)
    for masks in instances:
        _record_cauchy_davenport(report, kernel, p, masks)
    return report


def verify_cauchy_davenport(p, s=2, mode=EXHAUSTIVE, seed=None, budget=None, samples=None, threads=1):
    _check_arguments(p, mode)
    if s < 2:
        raise PreconditionError('s must be >= 2, got %s' % s)
    full = (1 << p) - 1
    if mode == EXHAUSTIVE:
        _check_budget(CAUCHY_DAVENPORT, p, full ** s, budget)
        logger.info('Cauchy-Davenport over Z/%d, s = %d: %d tuples', p, s, full ** s)
        shards = [(p, s, lo, hi) for lo, hi in _ranges(1, full + 1, SHARDS_PER_RUN)]
        reports = run_sharded(_cauchy_davenport_exhaustive_shard, shards, threads)
        return _merge(reports, BoundReport(CAUCHY_DAVENPORT, p, s, EXHAUSTIVE))
    seed = _lab_parameters()['Default Seed'] if seed is None else seed
    samples = _lab_parameters()['Sampled Instances'] if samples is None else samples
    rng = np.random.default_rng(seed)
    instances = [tuple(_random_mask(rng, p) for _ in range(s)) for _ in range(samples)]
    logger.info('Cauchy-Davenport over Z/%d, s = %d: %d sampled tuples (seed %s)', p, s, samples, seed)
    shards = [(p, s, chunk) for chunk in _chunks(instances, SHARDS_PER_RUN)]
    reports = run_sharded(_cauchy_davenport_sampled_shard, shards, threads)
    return _merge(reports, BoundReport(CAUCHY_DAVENPORT, p, s, SAMPLED, seed))


# Diderrich: s-1 progressions with pairwise distinct differences (up to sign)
# plus one unconstrained set E give |sum| >= min{p, sum |A_i| - 1}

def progression_bits(p, start, difference, length):
    bits = 0
    for nu in range(length):
        bits |= 1 << ((start + nu * difference) % p)
    return bits


def difference_families(p, count):
    """ Differences up to sign, one representative in [1, (p-1)/2] each """
    return list(itertools.combinations(range(1, (p - 1) // 2 + 1), count))


def _diderrich_exhaustive_shard(shard):
    # progressions start at 0: the fold size is translation invariant
    p, s, differences = shard
    kernel = _cyclic_kernel(p)
    report = BoundReport(DIDERRICH, p, s, EXHAUSTIVE)
    for lengths in itertools.product(range(2, p + 1), repeat=s - 1):
        progressions = tuple(progression_bits(p, 0, d, length) for d, length in zip(differences, lengths))
        folded = _fold_bits(kernel, progressions)
        base = sum(lengths) - 1
        for exceptional in range(1, kernel.full + 1):
            actual = popcount(sumset_bits(kernel, folded, iter_bits(exceptional)))
            bound = min(p, base + popcount(exceptional))
            report.record(actual, bound, progressions + (exceptional,), differences=list(differences))
    return report


def _diderrich_sampled_shard(shard):
    p, s, instances = shard
    kernel = _cyclic_kernel(p)
    report = BoundReport(DIDERRICH, p, s, SAMPLED)
    for progressions, exceptional, differences in instances:
        bound = min(p, sum(popcount(mask) for mask in progressions) + popcount(exceptional) - 1)
        sizes = []
        for position in range(s):
            masks = progressions[:position] + (exceptional,) + progressions[position:]
            sizes.append(popcount(_fold_bits(kernel, masks)))
        report.record(sizes[-1], bound, progressions + (exceptional,), differences=list(differences))
        if len(set(sizes)) != 1:
            report.violations.append({'kind': 'position', 'sizes': sizes,
                                      'sets': [list(iter_bits(m)) for m in progressions + (exceptional,)]})
    return report


def _sample_diderrich_instance(rng, p, s):
    half = np.arange(1, (p - 1) // 2 + 1)
    classes = rng.choice(half, size=s - 1, replace=False)
    signs = rng.integers(0, 2, size=s - 1)
    starts = rng.integers(0, p, size=s - 1)
    lengths = rng.integers(2, p + 1, size=s - 1)
    differences = tuple(int(d) if sign == 0 else p - int(d) for d, sign in zip(classes, signs))
    progressions = tuple(progression_bits(p, int(a), d, int(length))
                         for a, d, length in zip(starts, differences, lengths))
    return progressions, _random_mask(rng, p), differences


def verify_diderrich(p, s=2, mode=EXHAUSTIVE, seed=None, budget=None, samples=None, threads=1):
    _check_arguments(p, mode)
    if s < 2:
        raise PreconditionError('s must be >= 2, got %s' % s)
    if s - 1 > (p - 1) // 2:
        raise PreconditionError('Z/%d has only %d differences up to sign; %d progressions requested'
                                % (p, (p - 1) // 2, s - 1))
    full = (1 << p) - 1
    if mode == EXHAUSTIVE:
        families = difference_families(p, s - 1)
        count = len(families) * (p - 1) ** (s - 1) * full
        _check_budget(DIDERRICH, p, count, budget)
        logger.info('Diderrich over Z/%d, s = %d: %d families, %d instances', p, s, len(families), count)
        shards = [(p, s, differences) for differences in families]
        reports = run_sharded(_diderrich_exhaustive_shard, shards, threads)
        return _merge(reports, BoundReport(DIDERRICH, p, s, EXHAUSTIVE))
    seed = _lab_parameters()['Default Seed'] if seed is None else seed
    samples = _lab_parameters()['Sampled Instances'] if samples is None else samples
    rng = np.random.default_rng(seed)
    instances = [_sample_diderrich_instance(rng, p, s) for _ in range(samples)]
    logger.info('Diderrich over Z/%d, s = %d: %d sampled instances (seed %s)', p, s, samples, seed)
    shards = [(p, s, chunk) for chunk in _chunks(instances, SHARDS_PER_RUN)]
    reports = run_sharded(_diderrich_sampled_shard, shards, threads)
    return _merge(reports, BoundReport(DIDERRICH, p, s, SAMPLED, seed))


# Dias da Silva-Hamidoune: |Sigma_k(S)| >= min{p, k(|S|-k)+1}, and every
# S of Z/p minus 0 with |S| = floor(sqrt(4p-7)) spans Z/p

def spanning_size(p):
    return math.isqrt(4 * p - 7) if p >= 3 else 0


def _ddsh_shard(shard):
    # spanning_masks None: take the spanning-size nonzero sets among masks
    p, masks, spanning_masks = shard
    kernel = _cyclic_kernel(p)
    if spanning_masks is None:
        size = spanning_size(p)
        spanning_masks = [mask for mask in masks if size and not mask & 1 and popcount(mask) == size]
    bound_report = BoundReport(DDSH_BOUND, p)
    spanning_report = BoundReport(DDSH_SPANNING, p)
    for mask in masks:
        elements = list(iter_bits(mask))
        m = len(elements)
        layers = restricted_layers_bits(kernel, elements)
        for k in range(1, m + 1):
            bound_report.record(popcount(layers[k]), min(p, k * (m - k) + 1), (mask,), k=k)
            if 2 <= k <= m - 1:
                bound_report.observations['observation-checks'] += 1
                if k * (m - k) + 1 < m:
                    bound_report.violations.append({'kind': 'observation', 'k': k, 'size': m})
    for mask in spanning_masks:
        elements = list(iter_bits(mask))
        spanning_report.record(popcount(sigma_bits(kernel, elements)), p, (mask,))
        # the halfway layer alone is recorded, not required
        halfway = restricted_layers_bits(kernel, elements)[len(elements) // 2]
        if halfway != kernel.full:
            spanning_report.observations['halfway-layer-misses'] += 1
    return bound_report, spanning_report


def verify_ddsh(p, mode=EXHAUSTIVE, seed=None, budget=None, samples=None, threads=1):
    """
    Item 1 over every (S, k); item 2 as the spanning statement over the
    nonzero sets of size floor(sqrt(4p-7)). The returned ddsh-1 report
    carries the ddsh-2 report in sub_reports.
    """
    _check_arguments(p, mode)
    full = (1 << p) - 1
    size = spanning_size(p)
    if mode == EXHAUSTIVE:
        _check_budget('ddsh', p, full + 1, budget)
        logger.info('Dias da Silva-Hamidoune over Z/%d: %d subsets', p, full)
        shards = [(p, range(lo, hi), None) for lo, hi in _ranges(1, full + 1, SHARDS_PER_RUN)]
        bound_report = BoundReport(DDSH_BOUND, p, None, EXHAUSTIVE)
        spanning_report = BoundReport(DDSH_SPANNING, p, None, EXHAUSTIVE)
    else:
        seed = _lab_parameters()['Default Seed'] if seed is None else seed
        samples = _lab_parameters()['Sampled Instances'] if samples is None else samples
        rng = np.random.default_rng(seed)
        masks = [_random_mask(rng, p) for _ in range(samples)]
        nonzero = np.arange(1, p)
        spanning = [_random_subset_mask(rng, nonzero, size) for _ in range(samples)] if size else []
        logger.info('Dias da Silva-Hamidoune over Z/%d: %d sampled subsets (seed %s)', p, samples, seed)
        shards = [(p, chunk, spanning_chunk) for chunk, spanning_chunk
                  in itertools.zip_longest(_chunks(masks, SHARDS_PER_RUN), _chunks(spanning, SHARDS_PER_RUN),
                                           fillvalue=[])]
        bound_report = BoundReport(DDSH_BOUND, p, None, SAMPLED, seed)
        spanning_report = BoundReport(DDSH_SPANNING, p, None, SAMPLED, seed)
    for bound_part, spanning_part in run_sharded(_ddsh_shard, shards, threads):
        bound_report.merge(bound_part)
        spanning_report.merge(spanning_part)
    bound_report.sub_reports.append(spanning_report)
    return bound_report


VERIFIERS = {CAUCHY_DAVENPORT: verify_cauchy_davenport,
             DIDERRICH: verify_diderrich,
             'ddsh': verify_ddsh}
