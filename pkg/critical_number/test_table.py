#!/usr/bin/env python

import os
import csv
import shutil
import tempfile
import unittest

from critical_number.table import CSV_COLUMNS, cr_table, parse_orders, write_table_csv


class TestTable(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.rows = cr_table(range(3, 9), threads=1)
        self.directory = tempfile.mkdtemp()

    @classmethod
    def tearDownClass(self):
        shutil.rmtree(self.directory)

    def test_parse_orders(self):
        self.assertEqual(parse_orders('3..8'), [3, 4, 5, 6, 7, 8])
        self.assertEqual(parse_orders('3,5,7'), [3, 5, 7])
        self.assertEqual(parse_orders('7'), [7])

    def test_rows_agree(self):
        # nine groups of order 3..8, every one matching its closed form
        self.assertEqual(len(self.rows), 9)
        for row in self.rows:
            self.assertEqual(row.status, 'agree', row.group.name)
            self.assertTrue(row.agree)
        names = [row.group.name for row in self.rows]
        self.assertEqual(names[-3:], ['C8', 'C2xC4', 'C2xC2xC2'])

    def test_order_nine_agrees(self):
        rows = cr_table([9], threads=1)
        self.assertEqual([row.oracle for row in rows], [5, 5])
        self.assertTrue(all(row.status == 'agree' for row in rows))

    @unittest.skipUnless(os.environ.get('CRITICAL_NUMBER_ACCEPTANCE'), 'slow acceptance sweep')
    def test_orders_three_to_twenty_four(self):
        rows = cr_table(range(3, 25), threads=4)
        mismatched = [row.group.name for row in rows if row.status != 'agree']
        self.assertEqual(mismatched, [])

    def test_budget_rows(self):
        rows = cr_table([91], budget=1000, threads=1)
        self.assertEqual(rows[0].status, 'budget-exceeded')
        self.assertIsNone(rows[0].agree)

    def test_write_csv(self):
        path = os.path.join(self.directory, 'table.csv')
        write_table_csv(self.rows, path)
        with open(path) as f:
            records = list(csv.DictReader(f))
        self.assertEqual(list(records[0].keys()), CSV_COLUMNS)
        self.assertEqual(len(records), 9)
        self.assertEqual(records[0]['group'], 'C3')


if __name__ == '__main__':
    unittest.main()
