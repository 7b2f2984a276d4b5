#!/usr/bin/env python

import os
import json
import shutil
import tempfile
import unittest

import yaml

from group_core.exceptions import PreconditionError
from reporting.cache import ResultsCache, cache_key
from reporting import rendering
from reporting.rendering import get_template, render
from reporting.report import BUDGET_EXCEEDED, FAIL, PASS, RunReport, format_report
from reporting.runfile import LoadRunfile


class TestRunReport(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.report = RunReport('formula', {'group': 'C91'}, {'value': 18},
                                summary=['C91: cr = 18 (theorem-1.1-window)'])

    def test_digest_ignores_header(self):
        # wall time and worker count stay out of the payload
        other = RunReport('formula', {'group': 'C91'}, {'value': 18},
                          summary=['C91: cr = 18 (theorem-1.1-window)'], wall_time=3.5, threads=8)
        self.assertEqual(other.digest(), self.report.digest())
        self.assertNotIn('wall', json.dumps(self.report.payload()))

    def test_exit_codes(self):
        self.assertEqual(self.report.exit_code(), 0)
        self.assertEqual(RunReport('oracle', {}, {}, FAIL).exit_code(), 1)
        self.assertEqual(RunReport('table', {}, {}, BUDGET_EXCEEDED).exit_code(), 3)

    def test_json_lines(self):
        lines = format_report(self.report, 'json').splitlines()
        self.assertEqual(len(lines), 2)
        self.assertIn('header', json.loads(lines[0]))
        self.assertEqual(json.loads(lines[1]), self.report.payload())

    def test_yaml(self):
        text = format_report(self.report, 'yaml')
        self.assertTrue(text.startswith('# critical-number'))
        self.assertEqual(yaml.safe_load(text)['outcome'], {'value': 18})

    def test_text(self):
        text = format_report(self.report, 'text')
        self.assertIn('verdict: %s' % PASS, text)
        self.assertIn('digest: %s' % self.report.digest(), text)
        self.assertIn('group: C91', text)
        with self.assertRaises(ValueError):
            format_report(self.report, 'xml')

    def test_from_payload(self):
        restored = RunReport.from_payload(self.report.payload(), cached=True)
        self.assertEqual(restored.digest(), self.report.digest())
        self.assertTrue(restored.header_line().endswith('| cached'))

    def test_templates(self):
        with self.assertRaises(KeyError):
            get_template('unknown')
        # the templates ship inside the reporting package
        template_dir, name = get_template('report')
        self.assertEqual(os.path.dirname(template_dir), os.path.dirname(os.path.abspath(rendering.__file__)))
        self.assertTrue(os.path.isfile(os.path.join(template_dir, name)))
        self.assertIn('# group: C7', render('certificate', {'group': 'C7', 'records': []}))


class TestCacheAndRunfile(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.directory = tempfile.mkdtemp()

    @classmethod
    def tearDownClass(self):
        shutil.rmtree(self.directory)

    def test_cache_key(self):
        key = cache_key('verify', None, {'p': 7}, 1)
        self.assertEqual(key, cache_key('verify', None, {'p': 7}, 1))
        self.assertNotEqual(key, cache_key('verify', None, {'p': 7}, 2))

    def test_store_and_lookup(self):
        # the latest record under a key wins; bad lines are skipped
        cache = ResultsCache(os.path.join(self.directory, 'cache', 'results.jsonl'))
        key = cache_key('formula', 'C8', {'group': 'C8'})
        self.assertIsNone(cache.lookup(key))
        cache.store(key, RunReport('formula', {'group': 'C8'}, {'value': 4}, FAIL))
        with open(cache.path, 'a') as f:
            f.write('not json\n')
        cache.store(key, RunReport('formula', {'group': 'C8'}, {'value': 5}))
        payload = cache.lookup(key)
        self.assertEqual(payload['outcome'], {'value': 5})
        self.assertEqual(payload['verdict'], PASS)

    def test_runfile(self):
        path = os.path.join(self.directory, 'run.yml')
        with open(path, 'w') as f:
            yaml.safe_dump({'command': 'verify', 'theorem': 'ddsh', 'p': 7, 'no-cache': True}, f)
        runfile = LoadRunfile(path)
        self.assertEqual(runfile.command, 'verify')
        self.assertEqual(runfile.options(), {'theorem': 'ddsh', 'p': 7, 'no_cache': True})

    def test_bad_runfiles(self):
        with self.assertRaises(PreconditionError):
            LoadRunfile(os.path.join(self.directory, 'missing.yml'))
        path = os.path.join(self.directory, 'list.yml')
        with open(path, 'w') as f:
            f.write('- formula\n- C8\n')
        with self.assertRaises(PreconditionError):
            LoadRunfile(path)
        path = os.path.join(self.directory, 'nocommand.yml')
        with open(path, 'w') as f:
            f.write('group: C8\n')
        with self.assertRaises(PreconditionError):
            LoadRunfile(path)


if __name__ == '__main__':
    unittest.main()
