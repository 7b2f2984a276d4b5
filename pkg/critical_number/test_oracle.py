#!/usr/bin/env python

import unittest

from group_core.exceptions import BudgetExceeded, CriticalNumberError
from group_core.groups import parse_group_spec
from sumset_engine.subsets import GroupSubset
from sumset_engine.sumsets import sigma
from critical_number.oracle import cr_bruteforce, spanning_all_of_size


class TestOracle(unittest.TestCase):

    def test_small_groups(self):
        # oracle values and agreement with the closed form
        for text, value in (('C2', 2), ('C7', 4), ('C12', 6), ('C2xC4', 5),
                            ('C3xC3', 5), ('C2xC2', 3)):
            outcome = cr_bruteforce(parse_group_spec(text), threads=1)
            self.assertEqual(outcome.value, value, text)
            self.assertTrue(outcome.agrees)

    def test_cyclic_nine_needs_five(self):
        # {1, 3, 4, 7} misses 0 in Z/9, so four elements never suffice
        g = parse_group_spec('C9')
        self.assertNotIn(0, sigma(GroupSubset.from_indices(g, [1, 3, 4, 7])))
        outcome = cr_bruteforce(g, threads=1)
        self.assertEqual(outcome.value, 5)
        self.assertTrue(outcome.agrees)

    def test_failing_witness(self):
        # the witness has cr - 1 elements, avoids 0 and does not span
        outcome = cr_bruteforce(parse_group_spec('C12'), threads=1)
        witness = outcome.failing_witness
        self.assertEqual(len(witness), 5)
        self.assertNotIn(0, witness)
        self.assertFalse(sigma(witness).is_full())
        self.assertIn(6, outcome.sizes_checked)

    def test_extremal_shortcut_off(self):
        g = parse_group_spec('C10')
        self.assertEqual(cr_bruteforce(g, extremal_first=False, threads=1).value,
                         cr_bruteforce(g, extremal_first=True, threads=1).value)

    def test_spanning_all_of_size(self):
        g = parse_group_spec('C7')
        self.assertTrue(spanning_all_of_size(g, 4).spans)
        verdict = spanning_all_of_size(g, 3)
        self.assertFalse(verdict.spans)
        self.assertEqual(len(verdict.counterexample), 3)
        self.assertFalse(sigma(verdict.counterexample).is_full())
        self.assertTrue(spanning_all_of_size(g, 7).spans)
        with self.assertRaises(CriticalNumberError):
            spanning_all_of_size(g, 0)

    def test_threads_agree(self):
        g = parse_group_spec('C2xC6')
        self.assertEqual(spanning_all_of_size(g, 5, threads=1).spans,
                         spanning_all_of_size(g, 5, threads=2).spans)

    def test_budget(self):
        # C(90, 18) subsets are far beyond a small budget
        with self.assertRaises(BudgetExceeded) as context:
            spanning_all_of_size(parse_group_spec('C91'), 18, budget=1000)
        self.assertEqual(context.exception.partial['size'], 18)
        with self.assertRaises(BudgetExceeded) as context:
            cr_bruteforce(parse_group_spec('C91'), budget=1000)
        self.assertEqual(context.exception.partial['lower_bound'], 18)


if __name__ == '__main__':
    unittest.main()
