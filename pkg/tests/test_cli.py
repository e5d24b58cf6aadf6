#!/usr/bin/env python

"""Tests for the `knotmosaic` command line."""

import json
import unittest

from click.testing import CliRunner

from knotmosaic import cli

from tests import FIXTURES, fixture_path


def path(name):
    return str(fixture_path(name))


def grid_path(name):
    return str(FIXTURES / f"{name}.grid")


class TestCli(unittest.TestCase):

    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli.main, list(args))

    def test_help(self):
        result = self.invoke('--help')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('Show this message and exit.', result.output)
        for command in ('validate', 'enumerate', 'equiv', 'mosaic-number'):
            self.assertIn(command, result.output)

    def test_validate(self):
        result = self.invoke('validate', path('example_2'))
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, 'ok\n')

    def test_validate_failures(self):
        with self.runner.isolated_filesystem():
            with open('loose.mosaic', 'w') as fh:
                fh.write("2\n4 0\n0 0\n")
            with open('broken.mosaic', 'w') as fh:
                fh.write("2\n4 x\n0 0\n")
            result = self.invoke('validate', 'loose.mosaic')
            self.assertEqual(result.exit_code, 1)
            self.assertIn('not suitably connected: (0,0,W)', result.output)
            result = self.invoke('validate', 'broken.mosaic')
            self.assertEqual(result.exit_code, 2)
            self.assertIn('error:', result.output)

    def test_validate_json(self):
        result = self.invoke('validate', '--format', 'json', path('k1'))
        self.assertEqual(json.loads(result.output),
                         {'ok': True, 'n': 3, 'violation': None})

    def test_enumerate(self):
        result = self.invoke('enumerate', '-n', '3', '--count-only')
        self.assertEqual(result.output, '22 mosaics\n')
        result = self.invoke('enumerate', '-n', '2')
        self.assertEqual(result.output, '0 0;0 0\n2 1;3 4\n2 mosaics\n')

    def test_enumerate_to_file(self):
        with self.runner.isolated_filesystem():
            result = self.invoke('enumerate', '-n', '3', '-o', 'k3.txt.zst')
            self.assertEqual(result.exit_code, 0)
            self.assertEqual(result.output, '22 mosaics\n')

    def test_orbits(self):
        result = self.invoke('orbits', '-n', '3')
        self.assertEqual(result.output, '4 classes\n')

    def test_equiv_inside_n(self):
        result = self.invoke('equiv', path('k1'), path('k2'), '-n', '3')
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.output, 'distinct classes\n')
        result = self.invoke('equiv', path('k1'), path('k2'), '-n', '4')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, 'same class\n')

    def test_equiv_certificate(self):
        result = self.invoke('equiv', path('k1'), path('k2'))
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.startswith('certificate of '))
        result = self.invoke('equiv', path('census_n2_1'), path('k1'))
        self.assertEqual(result.exit_code, 1)
        self.assertIn('distinct', result.output)

    def test_zoom(self):
        result = self.invoke('zoom', path('zoom_input'))
        self.assertEqual(result.exit_code, 0)
        with open(path('zoom_output')) as fh:
            self.assertEqual(result.output, fh.read())

    def test_fingerprint(self):
        result = self.invoke('fingerprint', path('census_n2_1'))
        self.assertEqual(result.output, 'components: 1\nbracket: 1*A^0\n')
        result = self.invoke('fingerprint', '--jones', path('k1'))
        self.assertIn('jones:', result.output)

    def test_pd(self):
        result = self.invoke('pd', path('example_2'))
        self.assertEqual(result.exit_code, 0)
        self.assertIn('components: 1', result.output)
        self.assertEqual(result.output.count('X('), 3)

    def test_render(self):
        result = self.invoke('render', path('census_n2_1'))
        self.assertEqual(result.output, 'r7\nLJ\n')

    def test_catalog(self):
        result = self.invoke('catalog')
        self.assertEqual(result.exit_code, 0)
        self.assertIn('from 16 base patterns', result.output)

    def test_grid_commands(self):
        result = self.invoke('grid2mosaic', grid_path('unknot'))
        self.assertEqual(result.output, '2\n2 1\n3 4\n')
        result = self.invoke('mosaic2grid', path('census_n2_1'))
        self.assertEqual(result.output, '2\nX: 2 1\nO: 1 2\n')
        result = self.invoke('gridmove', grid_path('unknot'),
                             '--move', 'cyclic:columns:1')
        self.assertEqual(result.output, '2\nX: 1 2\nO: 2 1\n')

    def test_gridmove_certified(self):
        result = self.invoke('gridmove', grid_path('unlink'),
                             '--move', 'commute:columns:1', '--certify')
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(result.output.startswith('4\nX: 3 1 2 4\n'))

    def test_gridmove_not_applicable(self):
        result = self.invoke('gridmove', grid_path('unknot'),
                             '--move', 'destabilize:1:1')
        self.assertEqual(result.exit_code, 2)
        self.assertIn('error:', result.output)

    def test_mosaic_number(self):
        result = self.invoke('mosaic-number', '--witness', path('knot_4_1'))
        self.assertEqual(result.exit_code, 0)
        self.assertIn('lower 5 upper 5', result.output)

    def test_side_must_be_positive(self):
        for args in (('enumerate', '-n', '0', '--count-only'),
                     ('orbits', '-n', '0'),
                     ('mosaic-number', '--witness', path('knot_4_1'),
                      '--max-n', '0')):
            result = self.invoke(*args)
            self.assertEqual(result.exit_code, 2, args)

    def test_orbits_jobs(self):
        result = self.invoke('orbits', '-n', '3', '--jobs', '2')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, '4 classes\n')

    def test_json_outputs(self):
        result = self.invoke('grid2mosaic', '--format', 'json',
                             grid_path('unknot'))
        self.assertEqual(json.loads(result.output),
                         {'n': 2, 'rows': [[2, 1], [3, 4]]})
        result = self.invoke('mosaic2grid', '--format', 'json',
                             path('census_n2_1'))
        self.assertEqual(json.loads(result.output),
                         {'N': 2, 'X': [2, 1], 'O': [1, 2]})
        result = self.invoke('gridmove', '--format', 'json',
                             grid_path('unknot'),
                             '--move', 'cyclic:columns:1')
        self.assertEqual(json.loads(result.output),
                         {'N': 2, 'X': [1, 2], 'O': [2, 1]})
        result = self.invoke('render', '--format', 'json',
                             path('census_n2_1'))
        self.assertEqual(json.loads(result.output)['text'], 'r7\nLJ\n')
        result = self.invoke('zoom', '--format', 'json', path('census_n2_1'))
        document = json.loads(result.output)
        self.assertEqual(document['n'], 10)
        self.assertEqual(len(document['rows']), 10)

    def test_invariants_need_a_knot(self):
        with self.runner.isolated_filesystem():
            with open('loose.mosaic', 'w') as fh:
                fh.write("2\n4 0\n0 0\n")
            for args in (('fingerprint', 'loose.mosaic'),
                         ('mosaic-number', '--witness', 'loose.mosaic')):
                result = self.invoke(*args)
                self.assertEqual(result.exit_code, 2, args)
                self.assertIn('not suitably connected', result.output)
