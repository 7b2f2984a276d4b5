#!/usr/bin/env python

import unittest

from group_core.exceptions import PreconditionError, SubsetError, TheoremContradiction
from group_core.groups import parse_group_spec, quotient_project, subgroup_of_index_p
from sumset_engine.subsets import GroupSubset
from proof_tracer.decomposition import coset_decompose, collapse_of, fiber_bound_holds
from proof_tracer.construction import (FULL_PROGRESSIONS, TRIMMED_FIRST, build_construction_sets,
                                       covered_classes, progression_hypothesis,
                                       quotient_cover_check, quotient_subset_sum)
from proof_tracer.representation import (FiberTable, Representation, fiber_cover,
                                         find_representation, iter_representations)
from proof_tracer.certificate import _trace_target, sample_subsets


class TestDecomposition(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        # S = {3,6} u {1,4,7} u {2,11} in C15 with H = <3>
        self.g = parse_group_spec('C15')
        self.h = subgroup_of_index_p(self.g, 3)
        self.subset = GroupSubset.from_indices(self.g, [3, 6, 1, 4, 7, 2, 11])
        self.dec = coset_decompose(self.subset, self.h)

    def test_blocks(self):
        self.assertEqual(self.dec.s0.indices(), [3, 6])
        self.assertEqual((self.dec.t, self.dec.r, self.dec.u), (1, 0, 1))
        self.assertEqual(self.dec.block_sizes, (3, 2))
        self.assertEqual(self.dec.classes, (1, 2))
        self.assertEqual(self.dec.blocks[0].representative, 1)
        self.assertEqual((self.dec.p, self.dec.q), (3, 5))
        self.assertTrue(self.dec.accounting_holds())
        self.assertEqual(self.dec.counts(), {'s0': 2, 't': 1, 'r': 0, 'u': 1, 's': 2})

    def test_block_order(self):
        # large blocks by size, then singletons, then pairs
        g = parse_group_spec('C91')
        subset = GroupSubset.from_indices(g, [7, 2, 9, 1, 8, 15, 3, 4, 11, 18, 25])
        dec = coset_decompose(subset, subgroup_of_index_p(g, 7))
        self.assertEqual(dec.block_sizes, (4, 3, 1, 2))
        self.assertEqual(dec.classes, (4, 1, 3, 2))
        self.assertTrue(dec.accounting_holds())

    def test_accounting_on_random_sets(self):
        # |S0| + sum of large blocks + r + 2u = |S| and every block sits in one coset
        for text, p, size in (('C91', 7, 18), ('C209', 11, 28)):
            g = parse_group_spec(text)
            h = subgroup_of_index_p(g, p)
            for subset in sample_subsets(g, size, 40, seed=2):
                dec = coset_decompose(subset, h)
                self.assertTrue(dec.accounting_holds(), subset.indices())
                self.assertLessEqual(dec.s, p - 1)
                self.assertEqual(len(set(dec.classes)), dec.s)
                self.assertTrue(all(i % p == 0 for i in dec.s0))
                for block in dec.blocks:
                    self.assertEqual({quotient_project(g, h, i) for i in block.members}, {block.coset})

    def test_noncyclic_cosets(self):
        # H = {0, 3, 6} in C3xC3; blocks follow the quotient projection
        g = parse_group_spec('C3xC3')
        h = subgroup_of_index_p(g, 3)
        dec = coset_decompose(GroupSubset.from_indices(g, [1, 2, 3, 4, 5]), h)
        self.assertEqual(dec.s0.indices(), [3])
        self.assertEqual(dec.block_sizes, (2, 2))
        self.assertEqual(dec.classes, (1, 2))
        self.assertTrue(dec.accounting_holds())

    def test_rejects(self):
        with self.assertRaises(SubsetError):
            coset_decompose(self.subset.add(0), self.h)
        other = parse_group_spec('C21')
        with self.assertRaises(SubsetError):
            coset_decompose(self.subset, subgroup_of_index_p(other, 3))

    def test_collapse(self):
        self.assertEqual(collapse_of(self.dec, (3, 1)), 2)
        self.assertEqual(collapse_of(self.dec, (0, 2)), 3)
        self.assertEqual(collapse_of(self.dec, (1, 1)), 0)
        with self.assertRaises(SubsetError):
            collapse_of(self.dec, (4, 1))
        with self.assertRaises(SubsetError):
            collapse_of(self.dec, (1,))

    def test_fiber_bound(self):
        # (3+5-2) + 1 - C - 2 >= 5 only for C = 0
        self.assertTrue(fiber_bound_holds(self.dec, 0))
        self.assertFalse(fiber_bound_holds(self.dec, 1))


class TestConstruction(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        g = parse_group_spec('C15')
        subset = GroupSubset.from_indices(g, [3, 6, 1, 4, 7, 2, 11])
        self.dec = coset_decompose(subset, subgroup_of_index_p(g, 3))
        self.cs = build_construction_sets(self.dec)

    def test_sets(self):
        # A_1 = {1, 2}, D = {b0, b0 - b_1} = {2, 0}
        self.assertEqual(self.cs.a_subsets()[0].indices(), [1, 2])
        self.assertEqual(self.cs.b0, 2)
        self.assertEqual(self.cs.d_set, {2: None, 0: 1})
        self.assertEqual(self.cs.d_subset().indices(), [0, 2])
        self.assertTrue(progression_hypothesis(self.cs))

    def test_cover(self):
        verdict = quotient_cover_check(self.cs)
        self.assertTrue(verdict.covers)
        self.assertEqual(sorted(verdict.choices), [0, 1, 2])
        self.assertEqual(covered_classes(self.cs), [0, 1, 2])
        self.assertEqual(verdict.choices[2].a_coefficients, (2,))
        self.assertEqual(verdict.choices[2].d_choice, 1)

    def test_trimmed_variant(self):
        # the first coefficient stays in [2, |S_1| - 2]
        with self.assertRaises(PreconditionError):
            build_construction_sets(self.dec, TRIMMED_FIRST)
        g = parse_group_spec('C91')
        subset = GroupSubset.from_indices(g, [1, 8, 15, 22, 29, 2, 9])
        dec = coset_decompose(subset, subgroup_of_index_p(g, 7))
        cs = build_construction_sets(dec, TRIMMED_FIRST)
        self.assertEqual(cs.a_sets[0], {2: (2,), 3: (3,)})
        self.assertEqual(build_construction_sets(dec, FULL_PROGRESSIONS).a_sets[0],
                         {1: (1,), 2: (2,), 3: (3,), 4: (4,)})
        with self.assertRaises(PreconditionError):
            build_construction_sets(dec, 'lemma-0')

    def test_quotient_subset_sum(self):
        self.assertEqual(quotient_subset_sum(7, [1, 1, 1], 3), [0, 1, 2])
        self.assertEqual(quotient_subset_sum(7, [2, 3], 0), [])
        self.assertEqual(quotient_subset_sum(7, [2, 3], 5), [0, 1])
        self.assertIsNone(quotient_subset_sum(7, [2], 3))


class TestRepresentation(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.g = parse_group_spec('C15')
        self.subset = GroupSubset.from_indices(self.g, [3, 6, 1, 4, 7, 2, 11])
        self.dec = coset_decompose(self.subset, subgroup_of_index_p(self.g, 3))
        self.table = FiberTable(self.dec)

    def test_construction_route(self):
        rep = next(iter_representations(self.dec, 2, max_collapse=1))
        self.assertEqual(rep.coefficients, (2, 0))
        self.assertEqual(rep.collapse, 1)
        self.assertTrue(rep.congruence_holds(self.dec))
        self.assertEqual(find_representation(self.dec, 2).coefficients, (2, 0))
        with self.assertRaises(TheoremContradiction):
            find_representation(self.dec, 2, max_collapse=0)

    def test_trace_goes_through_construction(self):
        witness, entry = _trace_target(self.dec, self.table, 2, 1, FULL_PROGRESSIONS)
        self.assertEqual(entry.representation.coefficients, (2, 0))
        self.assertEqual(entry.fiber_size, 5)
        self.assertEqual(sum(witness) % 15, 2)
        # no collapse-free representation exists, and nothing else is tried
        with self.assertRaises(TheoremContradiction):
            _trace_target(self.dec, self.table, 2, 0, FULL_PROGRESSIONS)

    def test_fiber_fills_coset(self):
        # ({0,3,6,9}) + {1,4,7} + {13} is the coset 2 + H
        rep = Representation(2, (1, 2), 1, FULL_PROGRESSIONS)
        fiber = fiber_cover(self.dec, rep, self.table)
        self.assertEqual(fiber.indices(), [2, 5, 8, 11, 14])
        self.assertEqual(rep.as_dict()['route'], FULL_PROGRESSIONS)

    def test_witness(self):
        rep = Representation(2, (1, 2), 1, FULL_PROGRESSIONS)
        members = set(self.subset.indices())
        for x in (2, 5, 8, 11, 14):
            witness = self.table.witness(rep, x)
            self.assertEqual(len(set(witness)), len(witness))
            self.assertTrue(set(witness) <= members)
            self.assertEqual(sum(witness) % 15, x)
        self.assertIsNone(self.table.witness(rep, 1))


if __name__ == '__main__':
    unittest.main()
