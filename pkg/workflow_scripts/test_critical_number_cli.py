#!/usr/bin/env python

import io
import os
import json
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout

import yaml

from workflow_scripts import critical_number_cli


def run(argv):
    out = io.StringIO()
    with redirect_stdout(out):
        code = critical_number_cli.main(argv + ['--threads', '1'])
    return code, out.getvalue()


class TestCriticalNumberCLI(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.directory = tempfile.mkdtemp()
        self.saved = os.environ.get('CRITICAL_NUMBER_CACHE_DIR')
        os.environ['CRITICAL_NUMBER_CACHE_DIR'] = os.path.join(self.directory, 'cache')

    @classmethod
    def tearDownClass(self):
        if self.saved is None:
            del os.environ['CRITICAL_NUMBER_CACHE_DIR']
        else:
            os.environ['CRITICAL_NUMBER_CACHE_DIR'] = self.saved
        shutil.rmtree(self.directory)

    def test_formula(self):
        # json lines: header object, then the payload
        code, out = run(['formula', 'C91', '--no-cache', '--format', 'json'])
        self.assertEqual(code, 0)
        payload = json.loads(out.splitlines()[1])
        self.assertEqual(payload['outcome']['value'], 18)
        self.assertEqual(payload['outcome']['case_label'], 'theorem-1.1-window')

    def test_usage_errors(self):
        self.assertEqual(run(['formula', 'C0', '--no-cache'])[0], 2)
        self.assertEqual(run(['witness', 'C7', '--p', '7', '--no-cache'])[0], 2)
        self.assertEqual(run(['certify', 'C15', '--random', '1', '--method', 'tracer', '--no-cache'])[0], 2)
        with self.assertRaises(SystemExit):
            run(['nonsense'])

    def test_budget_exit_code(self):
        self.assertEqual(run(['oracle', 'C91', '--budget', '1000', '--no-cache'])[0], 3)
        self.assertEqual(run(['verify', 'cauchy-davenport', '--p', '5', '--budget', '10', '--no-cache'])[0], 3)

    def test_verify(self):
        code, out = run(['verify', 'ddsh', '--p', '7', '--no-cache', '--format', 'yaml'])
        self.assertEqual(code, 0)
        payload = yaml.safe_load(out)
        self.assertEqual(payload['verdict'], 'pass')
        self.assertEqual(payload['outcome']['sub_reports'][0]['theorem'], 'ddsh-2')

    def test_witness_and_table(self):
        self.assertEqual(run(['witness', 'C91', '--no-cache'])[0], 0)
        self.assertEqual(run(['witness', '--sweep', '30', '--no-cache'])[0], 0)
        path = os.path.join(self.directory, 'table.csv')
        self.assertEqual(run(['table', '--orders', '3..6', '--out', path, '--no-cache'])[0], 0)
        self.assertTrue(os.path.exists(path))

    def test_certify(self):
        directory = os.path.join(self.directory, 'certificates')
        code, out = run(['certify', 'C91', '--random', '2', '--seed', '4', '--certificate-dir', directory,
                         '--no-cache', '--format', 'json'])
        self.assertEqual(code, 0)
        rows = json.loads(out.splitlines()[1])['outcome']
        self.assertEqual(len(rows), 2)
        self.assertTrue(all(row['agree'] for row in rows))
        self.assertEqual(len(os.listdir(directory)), 2)
        code, _ = run(['certify', 'C7', '--set', '1,2,4', '--method', 'dp', '--certificate-dir', directory,
                       '--no-cache'])
        self.assertEqual(code, 0)
        code, _ = run(['certify', 'C7', '--set', '1,x', '--method', 'dp', '--no-cache'])
        self.assertEqual(code, 2)

    def test_cache(self):
        # the second identical run is answered from the cache
        first = run(['formula', 'C8', '--format', 'json'])
        second = run(['formula', 'C8', '--format', 'json'])
        self.assertEqual(first[0], second[0])
        self.assertIn('cached', json.loads(second[1].splitlines()[0])['header'])
        self.assertEqual(first[1].splitlines()[1], second[1].splitlines()[1])

    def test_set_file_contents_enter_the_cache_key(self):
        path = os.path.join(self.directory, 'set.txt')
        directory = os.path.join(self.directory, 'set_certificates')
        with open(path, 'w') as f:
            f.write('1 2 4\n')
        argv = ['certify', 'C7', '--set-file', path, '--method', 'dp', '--certificate-dir', directory]
        first = critical_number_cli.cache_parameters(critical_number_cli.parse_arguments(argv))
        self.assertEqual(run(argv)[0], 0)
        with open(path, 'w') as f:
            f.write('1 6\n')
        second = critical_number_cli.cache_parameters(critical_number_cli.parse_arguments(argv))
        self.assertNotEqual(first['set_file_sha256'], second['set_file_sha256'])
        # {1, 6} sums to 1, 6 and 0 only
        code, out = run(argv + ['--format', 'json'])
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out.splitlines()[1])['outcome'][0]['set'], [1, 6])

    def test_file_outputs_skip_the_cache(self):
        path = os.path.join(self.directory, 'rerun.csv')
        argv = ['table', '--orders', '3..5', '--out', path]
        self.assertTrue(critical_number_cli.writes_files(critical_number_cli.parse_arguments(argv)))
        self.assertEqual(run(argv)[0], 0)
        os.remove(path)
        code, out = run(argv + ['--format', 'json'])
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(path))
        self.assertNotIn('cached', json.loads(out.splitlines()[0])['header'])
        self.assertFalse(critical_number_cli.writes_files(
            critical_number_cli.parse_arguments(['certify', 'C91', '--random', '1'])))

    def test_formula_help_lists_window_groups(self):
        self.assertTrue(critical_number_cli.window_epilog(300).endswith('C91, C209, C299'))
        out = io.StringIO()
        with redirect_stdout(out), self.assertRaises(SystemExit):
            critical_number_cli.main(['formula', '--help'])
        self.assertIn('C209', out.getvalue())

    def test_runfile(self):
        # explicit flags override the run file
        path = os.path.join(self.directory, 'formula.yml')
        with open(path, 'w') as f:
            yaml.safe_dump({'command': 'formula', 'group': 'C8', 'format': 'yaml', 'no-cache': True}, f)
        args = critical_number_cli.parse_arguments(['--runfile', path, '--format', 'json'])
        self.assertEqual((args.command, args.group, args.format), ('formula', 'C8', 'json'))
        self.assertTrue(args.no_cache)
        code, out = run(['--runfile', path])
        self.assertEqual(code, 0)
        self.assertEqual(yaml.safe_load(out)['outcome']['value'], 5)


if __name__ == '__main__':
    unittest.main()
