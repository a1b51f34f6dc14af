'''
cli_tests.py: Holds the command line tests
'''

import io
import json
import os
import unittest

import mock
from testfixtures import TempDirectory

from heawood_ude.cli import precision_stages, run
from heawood_ude.exporters.json_document import dumps_embeddings
from heawood_ude.tests.fixtures import polished_tables


def run_captured(argv):
    """ Exit status, standard output and standard error of one invocation """
    with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
            mock.patch('sys.stderr', new_callable=io.StringIO) as err:
        status = run(argv)
    return status, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):
    """ Holds command line tests """

    def test_incidence(self):
        """ Lines, flags, axioms and girth as JSON """
        status, out, _ = run_captured(['-q', 'incidence'])
        self.assertEqual(status, 0)
        document = json.loads(out)
        self.assertEqual(sorted(document),
                         ['axioms', 'flags', 'girth', 'lines'])
        self.assertEqual(document['girth'], 6)
        self.assertEqual(len(document['lines']), 7)
        self.assertEqual(len(document['flags']), 21)
        self.assertTrue(all(document['axioms'].values()))

    def test_usage(self):
        """ Usage errors exit with 2 """
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            self.assertEqual(run([]), 2)
            self.assertEqual(run(['bogus']), 2)
            self.assertEqual(run(['solve', '--grid', 'many']), 2)
            self.assertEqual(run(['solve', '--digits', '0']), 2)
            self.assertEqual(run(['verify']), 2)

    def test_stages(self):
        """ Precision stages derived from --digits """
        self.assertEqual(precision_stages(60), (30, 60))
        self.assertEqual(precision_stages(15), (10, 15))
        self.assertEqual(precision_stages(10), (10,))
    @mock.patch('heawood_ude.cli.solve_all')
    def test_solve(self, solve_all):
        """ solve writes the embeddings and the summary line """
        solve_all.return_value = list(polished_tables(60))
        with TempDirectory() as directory:
            path = os.path.join(directory.path, 'out.json')
            status, out, _ = run_captured(['-q', 'solve', '--digits', '60',
                                           '--json', path])
            self.assertEqual(status, 0)
            self.assertEqual(out, 'found=11 expected=11\n')
            with open(path, 'r') as stream:
                self.assertEqual(len(json.load(stream)), 11)
        config = solve_all.call_args[0][0]
        self.assertEqual(config.precision_stages, (30, 60))

    @mock.patch('heawood_ude.cli.solve_all')
    def test_solve_short(self, solve_all):
        """ Fewer than eleven embeddings exit with 1 """
        solve_all.return_value = list(polished_tables(60))[:10]
        status, out, err = run_captured(['-q', 'solve', '--grid', '2000'])
        self.assertEqual(status, 1)
        self.assertEqual(len(json.loads(out)), 10)
        self.assertIn('found=10 expected=11', err)
        self.assertEqual(solve_all.call_args[0][0].grid_points, 2000)

    def test_seed_tables(self):
        """ Polishing the packaged tables; stdout holds only JSON """
        status, out, err = run_captured(['-q', 'solve', '--digits', '30',
                                         '--seed-tables', 'builtin'])
        self.assertEqual(status, 0)
        self.assertEqual(len(json.loads(out)), 11)
        self.assertIn('found=11 expected=11', err)

    def test_verify(self):
        """ Certificates for a JSON file """
        with TempDirectory() as directory:
            path = directory.write(
                'embeddings.json',
                dumps_embeddings(polished_tables(60)).encode('ascii'))
            out_path = os.path.join(directory.path, 'certificates.json')
            status, out, _ = run_captured(['-q', 'verify', '--json', path,
                                           '--out', out_path])
            self.assertEqual(status, 0)
            self.assertEqual(out, 'passed=11 total=11\n')
            with open(out_path, 'r') as stream:
                certificates = json.load(stream)
        self.assertEqual([c['matched_table'] for c in certificates],
                         list(range(1, 12)))
        self.assertTrue(all(c['pass'] for c in certificates))

    def test_verify_stdout(self):
        """ Certificates on stdout, the summary on stderr """
        with TempDirectory() as directory:
            path = directory.write(
                'embeddings.json',
                dumps_embeddings(polished_tables(60)[:2]).encode('ascii'))
            status, out, err = run_captured(['-q', 'verify', '--json', path])
        self.assertEqual(status, 0)
        self.assertEqual(len(json.loads(out)), 2)
        self.assertIn('passed=2 total=2', err)

    def test_render(self):
        """ One SVG per embedding """
        with TempDirectory() as directory:
            path = directory.write(
                'embeddings.json',
                dumps_embeddings(polished_tables(60)).encode('ascii'))
            figures = os.path.join(directory.path, 'figs')
            status, _, _ = run_captured(['-q', 'render', '--json', path,
                                         '--svg', figures])
            self.assertEqual(status, 0)
            self.assertEqual(len(os.listdir(figures)), 11)

    def test_roots(self):
        """ Eleven refined roots """
        status, out, err = run_captured(['-q', 'roots', '--digits', '20'])
        self.assertEqual(status, 0)
        roots = json.loads(out)
        self.assertEqual(len(roots), 11)
        self.assertEqual(sorted(roots[0]), ['hi', 'lo', 'root'])
        self.assertAlmostEqual(float(roots[0]['root']), -0.730124164909779,
                               delta=1e-13)
        self.assertIn('real_roots=11 expected=11', err)

    def test_error_status(self):
        """ Package errors exit with 1 """
        status, _, _ = run_captured(['-q', '--config', '/nonexistent.yaml',
                                     'solve'])
        self.assertEqual(status, 1)


if __name__ == '__main__':
    unittest.main()
