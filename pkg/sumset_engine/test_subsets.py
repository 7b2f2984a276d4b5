#!/usr/bin/env python

import unittest

from group_core.exceptions import SubsetError
from group_core.groups import parse_group_spec
from sumset_engine.subsets import GroupSubset, iter_bits, popcount, translate_bits
from sumset_engine.parallel import run_sharded


class TestGroupSubset(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.groups = [parse_group_spec(text) for text in ('C7', 'C12', 'C2xC4', 'C2xC2xC2', 'C3xC6')]

    def test_translate_matches_group_addition(self):
        # the rotation kernel agrees with element-wise addition
        for g in self.groups:
            members = [i for i in range(g.order) if i % 3 != 1]
            subset = GroupSubset.from_indices(g, members)
            for element in range(g.order):
                expected = GroupSubset.from_indices(g, [g.add(i, element) for i in members])
                self.assertEqual(subset.translate(element), expected, (g.name, element))

    def test_set_operations(self):
        g = self.groups[1]
        a = GroupSubset.from_indices(g, [1, 2, 3])
        b = GroupSubset.from_indices(g, [3, 4])
        self.assertEqual((a | b).indices(), [1, 2, 3, 4])
        self.assertEqual((a & b).indices(), [3])
        self.assertEqual((a - b).indices(), [1, 2])
        self.assertTrue((a & b).issubset(a))
        self.assertEqual(len(a), 3)
        self.assertIn(2, a)
        self.assertNotIn(12, a)
        self.assertEqual(a.add(0).discard(1).indices(), [0, 2, 3])
        self.assertEqual(a.total(), 6)
        self.assertEqual(a.negation().indices(), [9, 10, 11])

    def test_immutable_and_hashable(self):
        g = self.groups[0]
        a = GroupSubset.from_indices(g, [1, 2])
        with self.assertRaises(AttributeError):
            a.bits = 0
        self.assertEqual(len({a, GroupSubset.from_indices(g, [2, 1])}), 1)

    def test_rejects(self):
        g = self.groups[0]
        with self.assertRaises(SubsetError):
            GroupSubset.from_indices(g, [7])
        with self.assertRaises(SubsetError):
            GroupSubset(g, 1 << 7)
        with self.assertRaises(SubsetError):
            GroupSubset.full(g) | GroupSubset.full(self.groups[1])

    def test_bit_helpers(self):
        self.assertEqual(list(iter_bits(0b101001)), [0, 3, 5])
        self.assertEqual(popcount(0b101001), 3)
        g = self.groups[0]
        self.assertEqual(translate_bits(g, 0b1000001, 1), 0b0000011)
        self.assertTrue(GroupSubset.full(g).is_full())
        self.assertFalse(GroupSubset.empty(g))

    def test_run_sharded_keeps_order(self):
        self.assertEqual(run_sharded(abs, [-1, -2, 3, -4], threads=1), [1, 2, 3, 4])
        self.assertEqual(run_sharded(abs, [-1, -2, 3, -4], threads=2), [1, 2, 3, 4])


if __name__ == '__main__':
    unittest.main()
