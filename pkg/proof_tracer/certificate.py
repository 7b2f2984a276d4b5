#!/usr/bin/env python
"""
Spanning certificates: for every x in G a subset I_x of S with sum x. The
tracer builds them along the case split for |S| = p+q-2 in C_pq; the
direct route reads them off the Sigma(S) closure. Certificates are checked
by re-summing, independently of how they were produced.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import partial, reduce

import numpy as np

from critical_number.formula import in_theorem_window
from group_core.exceptions import PreconditionError, TheoremContradiction
from group_core.groups import (GroupElement, GroupSpec, group_add, parse_group_spec,
                               subgroup_of_index_p)
from group_core.numbertheory import floor_two_sqrt, is_prime, smallest_prime_divisor
from reporting.rendering import render
from sumset_engine.parallel import run_sharded
from sumset_engine.subsets import GroupSubset, kernel_for
from sumset_engine.sumsets import backtrack_sigma, sigma, sigma_snapshots
from proof_tracer.construction import (FULL_PROGRESSIONS, TRIMMED_FIRST,
                                       build_construction_sets, quotient_cover_check,
                                       quotient_subset_sum)
from proof_tracer.decomposition import coset_decompose, collapse_of, fiber_bound_holds
from proof_tracer.representation import FiberTable, Representation, fiber_cover, find_representation

logger = logging.getLogger(__name__)

LARGE_S0 = 'prop-4.1'
MEDIUM_S0 = 'prop-4.5'
SMALL_BLOCKS = 'prop-4.6'
LARGE_FIRST_BLOCK = 'prop-4.8'
DIRECT = 'direct-dp'
CASE_LABELS = (LARGE_S0, MEDIUM_S0, SMALL_BLOCKS, LARGE_FIRST_BLOCK, DIRECT)

SHARDS_PER_RUN = 16


@dataclass(frozen=True)
class TraceEntry:
    representation: Representation
    fiber_size: int
    bound_holds: bool

    def as_dict(self):
        record = self.representation.as_dict()
        record.update({'fiber_size': self.fiber_size, 'bound_holds': self.bound_holds})
        return record


@dataclass
class SpanCertificate:
    group: GroupSpec
    subset: GroupSubset
    case_label: str
    per_element: dict
    trace: dict = field(default_factory=dict)
    p: int = None
    q: int = None
    counts: dict = field(default_factory=dict)
    missing: tuple = ()
    cover_missed: tuple = ()
    truncated_from: int = None

    @property
    def max_collapse(self):
        # the maximum of the per-x collapses over the whole trace
        collapses = [entry.representation.collapse for entry in self.trace.values()]
        return max(collapses) if collapses else None

    @property
    def routes(self):
        return Counter(entry.representation.route for entry in self.trace.values())

    def as_dict(self):
        return {'group': self.group.name, 'p': self.p, 'q': self.q, 'case': self.case_label,
                'set': self.subset.indices(), 'counts': dict(self.counts),
                'witnesses': len(self.per_element), 'missing': list(self.missing),
                'cover_missed': list(self.cover_missed), 'max_collapse': self.max_collapse,
                'routes': dict(sorted(self.routes.items())), 'truncated_from': self.truncated_from}


@dataclass(frozen=True)
class CertificateVerdict:
    passed: bool
    failures: tuple = ()

    def as_dict(self):
        return {'passed': self.passed,
                'failures': [{'x': x, 'reason': reason} for x, reason in self.failures]}


def window_parameters(g):
    """ (p, q) for C_pq with p + floor(2 sqrt(p-2)) + 1 < q < 2p """
    n = g.order
    if n < 2 or not g.is_cyclic:
        raise PreconditionError('%s is not cyclic of order pq' % g.name)
    p = smallest_prime_divisor(n)
    q = n // p
    if q == 1 or not is_prime(q) or not in_theorem_window(p, q):
        raise PreconditionError('%s is outside the prime window p + floor(2 sqrt(p-2)) + 1 < q < 2p'
                                % g.name)
    if p < 7:
        raise PreconditionError('the prime window needs p >= 7, got %s' % p)
    return p, q


def dispatch_case(dec):
    """ (case label, collapse budget, construction variant) by (|S0|, |S_1|) """
    first = dec.blocks[0].size if dec.s else 0
    if len(dec.s0) >= floor_two_sqrt(dec.q - 2):
        return LARGE_S0, None, None
    if len(dec.s0) >= 3:
        return MEDIUM_S0, 1, FULL_PROGRESSIONS
    if first <= 3:
        return SMALL_BLOCKS, (0 if dec.s == dec.p - 1 else 1), FULL_PROGRESSIONS
    return LARGE_FIRST_BLOCK, 1, TRIMMED_FIRST


def _large_s0_witnesses(dec):
    # Sigma(S0) = H, and p-1 elements outside H reach every coset
    g = dec.group
    p = dec.p
    if sigma(dec.s0).bits != dec.subgroup.member_set.bits:
        raise TheoremContradiction('Sigma(S0) is not H although |S0| = %d' % len(dec.s0),
                                   {'s0': dec.s0.indices(), 'group': g.name})
    outside = [i for i in dec.subset if dec.subgroup.coset_of[i] != 0][:p - 1]
    classes = [dec.subgroup.coset_of[b] for b in outside]
    s0 = dec.s0.indices()
    snapshots = sigma_snapshots(kernel_for(g), s0)
    per_element = {}
    for x in range(g.order):
        chosen = quotient_subset_sum(p, classes, dec.subgroup.coset_of[x])
        if chosen is None:
            raise TheoremContradiction('coset of %d unreachable from %s' % (x, outside),
                                       {'x': x, 'outside': outside})
        picked = [outside[j] for j in chosen]
        rest = g.subtract(x, reduce(g.add, picked, 0))
        per_element[x] = tuple(sorted(picked + backtrack_sigma(g, s0, snapshots, rest)))
    return per_element


def _trace_target(dec, table, x, max_collapse, variant):
    rep = find_representation(dec, x, max_collapse, variant)
    fiber = fiber_cover(dec, rep, table)
    holds = fiber_bound_holds(dec, rep.collapse)
    details = {'x': x, 'representation': rep.as_dict(), 'set': dec.subset.indices()}
    if holds and len(fiber) < dec.q:
        raise TheoremContradiction('fiber of %d has %d < q elements although the bound holds'
                                   % (x, len(fiber)), details)
    if x not in fiber:
        raise TheoremContradiction('%d lies outside the fiber of its representation' % x, details)
    return tuple(table.witness(rep, x)), TraceEntry(rep, len(fiber), holds)


def _certify_targets(shard):
    # called in certify_span; rebuilds the shared tables in the worker
    factors, bits, p, max_collapse, variant, targets = shard
    g = GroupSpec(factors)
    dec = coset_decompose(GroupSubset(g, bits), subgroup_of_index_p(g, p))
    table = FiberTable(dec)
    return [(x,) + _trace_target(dec, table, x, max_collapse, variant) for x in targets]


def certify_span(subset, truncate=False, threads=1):
    g = subset.group
    p, q = window_parameters(g)
    if 0 in subset:
        raise PreconditionError('S must avoid the identity')
    size = p + q - 2
    truncated_from = None
    if len(subset) < size:
        raise PreconditionError('|S| = %d, the window needs |S| = p + q - 2 = %d' % (len(subset), size))
    if len(subset) > size:
        if not truncate:
            raise PreconditionError('|S| = %d exceeds p + q - 2 = %d; truncation not requested'
                                    % (len(subset), size))
        truncated_from = len(subset)
        subset = GroupSubset.from_indices(g, subset.indices()[:size])
    dec = coset_decompose(subset, subgroup_of_index_p(g, p))
    case, max_collapse, variant = dispatch_case(dec)
    logger.info('certifying a %d-set in %s as %s (%s)', len(subset), g.name, case, dec.counts())
    cover_missed = ()
    trace = {}
    if case == LARGE_S0:
        per_element = _large_s0_witnesses(dec)
    else:
        cover_missed = quotient_cover_check(build_construction_sets(dec, variant)).missed
        targets = list(range(g.order))
        step = max(1, -(-len(targets) // SHARDS_PER_RUN))
        shards = [(g.invariant_factors, subset.bits, p, max_collapse, variant, targets[i:i + step])
                  for i in range(0, len(targets), step)]
        per_element = {}
        for results in run_sharded(_certify_targets, shards, threads):
            for x, witness, entry in results:
                per_element[x] = witness
                trace[x] = entry
    return SpanCertificate(g, subset, case, per_element, trace, p, q, dec.counts(),
                           (), tuple(cover_missed), truncated_from)


def certify_direct(subset):
    """ Certificate read off the Sigma(S) closure; any group, any S """
    g = subset.group
    elements = subset.indices()
    snapshots = sigma_snapshots(kernel_for(g), elements)
    per_element, missing = {}, []
    for x in range(g.order):
        if (snapshots[-1] >> x) & 1:
            per_element[x] = tuple(sorted(backtrack_sigma(g, elements, snapshots, x)))
        else:
            missing.append(x)
    if missing:
        logger.info('%d elements of %s are not subset sums', len(missing), g.name)
    return SpanCertificate(g, subset, DIRECT, per_element, missing=tuple(missing))


def validate_certificate(cert):
    g = cert.group
    members = set(cert.subset.indices())
    failures = [(x, 'not a subset sum') for x in cert.missing]
    for x in sorted(set(cert.per_element) - set(range(g.order))):
        failures.append((x, 'not an element of %s' % g.name))
    for x in range(g.order):
        witness = cert.per_element.get(x)
        if witness is None:
            if x not in cert.missing:
                failures.append((x, 'no witness'))
        elif not witness:
            failures.append((x, 'empty witness'))
        elif len(set(witness)) != len(witness):
            failures.append((x, 'witness repeats an element'))
        elif not set(witness) <= members:
            failures.append((x, 'witness uses elements outside S'))
        else:
            total = int(reduce(partial(group_add, g), witness, GroupElement(g, 0)))
            if total != x:
                failures.append((x, 'witness sums to %d' % total))
    if cert.trace:
        dec = coset_decompose(cert.subset, subgroup_of_index_p(g, cert.p))
        for x, entry in sorted(cert.trace.items()):
            rep = entry.representation
            if rep.target != x or not rep.congruence_holds(dec):
                failures.append((x, 'representation breaks the coset congruence'))
            elif collapse_of(dec, rep.coefficients) != rep.collapse:
                failures.append((x, 'collapse recorded as %d' % rep.collapse))
    return CertificateVerdict(not failures, tuple(failures))


def sample_subsets(g, size, count, seed):
    """ count seeded random size-subsets of G minus 0 """
    if size > g.order - 1:
        raise PreconditionError('%s has only %d nonzero elements' % (g.name, g.order - 1))
    rng = np.random.default_rng(seed)
    nonzero = np.arange(1, g.order)
    return [GroupSubset.from_indices(g, [int(i) for i in rng.choice(nonzero, size=size, replace=False)])
            for _ in range(count)]


def write_certificate(cert, path):
    keywords = {'group': cert.group.name, 'p': cert.p, 'q': cert.q, 'case_label': cert.case_label,
                'counts': ' '.join('%s=%s' % item for item in cert.counts.items()),
                'subset': json.dumps(cert.subset.indices()),
                'records': [(x, json.dumps(list(cert.per_element[x]))) for x in sorted(cert.per_element)],
                'missing': json.dumps(list(cert.missing))}
    with open(path, 'w') as f:
        f.write(render('certificate', keywords))
    return path


def read_certificate(path):
    header, per_element = {}, {}
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                key, _, value = line[1:].partition(':')
                header[key.strip()] = value.strip()
            else:
                x, _, witness = line.partition(':')
                per_element[int(x)] = tuple(json.loads(witness))
    for key in ('group', 'case', 'set'):
        if key not in header:
            raise PreconditionError('certificate %s has no %r header' % (path, key))
    g = parse_group_spec(header['group'])
    counts = dict((k, int(v)) for k, _, v in (item.partition('=') for item in header.get('counts', '').split()))

    def number(key):
        value = header.get(key, 'None')
        return None if value == 'None' else int(value)

    return SpanCertificate(g, GroupSubset.from_indices(g, json.loads(header['set'])), header['case'],
                           per_element, {}, number('p'), number('q'), counts,
                           tuple(json.loads(header.get('missing', '[]'))))
