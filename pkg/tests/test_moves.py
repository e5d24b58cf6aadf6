#!/usr/bin/env python

"""Tests for `knotmosaic.moves`."""

import os
import random
import tempfile
import unittest

from knotmosaic.errors import BoundsError, MosaicParseError
from knotmosaic.invariants import fingerprint
from knotmosaic.mosaic import (Mosaic, boundary_profile, check_connectivity,
                               is_suitably_connected)
from knotmosaic.moves import (CATALOG_FILE, MoveApplication, MovePattern,
                              apply_move, applicable_moves, corner_variants,
                              generator_catalog, load_catalog, parse_catalog,
                              read_catalog)
from knotmosaic.tiles import D4

from tests import load

WALK_STARTS = ('example_2_injected', 'k2_injected', 'zoom_input',
               'knot_4_1', 'knot_5_1', 'knot_5_2', 'knot_6_2',
               'knot_7_4')
WALK_STEPS = 500

P7_TEXT = """\
2 Q1
2
0 0
1 0
2
2 1
8 4
"""


class TestCatalog(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.catalog = generator_catalog()

    def test_base_file(self):
        base = read_catalog(CATALOG_FILE)
        self.assertEqual(
            [p.label for p in base],
            ['P%d' % k for k in range(1, 12)]
            + ['R1', 'R2', 'R3', 'C1', 'U1'])
        self.assertEqual([p.k for p in base], [2] * 13 + [3, 3, 4])
        self.assertGreater(len(self.catalog), len(base))

    def test_patterns_are_moves(self):
        for p in self.catalog:
            self.assertTrue(p.is_consistent(), p.label)
            for side in (p.side_a, p.side_b):
                self.assertTrue(check_connectivity(side, open_boundary=True),
                                p.label)
            self.assertEqual(boundary_profile(p.side_a),
                             boundary_profile(p.side_b))

    def test_closed_under_symmetry(self):
        for p in self.catalog:
            for g in D4:
                self.assertIn(p.transformed(g), self.catalog)

    def test_labels_unique(self):
        labels = [p.label for p in self.catalog]
        self.assertEqual(len(labels), len(set(labels)))
        self.assertIs(self.catalog.pattern('R3'), self.catalog.by_label['R3'])
        self.assertIsNone(self.catalog.pattern('P99'))

    def test_no_move_on_blank(self):
        for n in range(1, 5):
            self.assertEqual(applicable_moves(Mosaic.blank(n)), [])


class TestCornerVariants(unittest.TestCase):

    def test_variants(self):
        base = {p.label: p for p in read_catalog(CATALOG_FILE)}
        variants = corner_variants(base['P7'])
        labels = [v.label for v in variants]
        self.assertIn('P7+nw', labels)
        for v in variants:
            self.assertTrue(v.label.startswith('P7+'))
            self.assertTrue(v.is_consistent())
        nw = variants[labels.index('P7+nw')]
        self.assertEqual(nw.side_a.rows, ((4, 0), (1, 0)))
        self.assertEqual(nw.side_b.rows, ((8, 1), (8, 4)))


class TestApplication(unittest.TestCase):

    def test_successors_are_involutive(self):
        catalog = generator_catalog()
        seen = 0
        for name in ('example_2', 'example_2_injected', 'k1', 'zoom_input',
                     'knot_4_1'):
            m = load(name)
            successors = list(catalog.successors(m))
            seen += len(successors)
            for app, result in successors:
                self.assertNotEqual(result, m)
                self.assertTrue(is_suitably_connected(result), str(app))
                self.assertEqual(apply_move(m, app), result)
                self.assertEqual(apply_move(result, app), m)
        self.assertTrue(seen)

    def test_random_walks(self):
        catalog = generator_catalog()
        rng = random.Random(7)
        starts = [m for m in map(load, WALK_STARTS) if catalog.applicable(m)]
        self.assertTrue(starts)
        applied = 0
        while applied < 10 ** 4:
            current = starts[applied // WALK_STEPS % len(starts)]
            expected = fingerprint(current, cap=current.n ** 2)
            for _ in range(WALK_STEPS):
                app, result = rng.choice(list(catalog.successors(current)))
                self.assertEqual(apply_move(result, app), current, str(app))
                self.assertTrue(is_suitably_connected(result), str(app))
                self.assertEqual(fingerprint(result, cap=result.n ** 2),
                                 expected, str(app))
                current = result
                applied += 1

    def test_inert_and_out_of_bounds(self):
        catalog = generator_catalog()
        r3 = catalog.pattern('R3')
        blank = Mosaic.blank(4)
        self.assertEqual(apply_move(blank, MoveApplication(r3, 0, 0)), blank)
        with self.assertRaises(BoundsError):
            apply_move(blank, MoveApplication(r3, 2, 0))

    def test_tangle_pairs(self):
        catalog = generator_catalog()
        for a, b in (('commutation_3a', 'commutation_3b'),
                     ('stabilization_1a', 'stabilization_1b'),
                     ('stabilization_1b', 'stabilization_1c'),
                     ('stabilization_2a', 'stabilization_2b'),
                     ('stabilization_3a', 'stabilization_3b'),
                     ('stabilization_4a', 'stabilization_4b'),
                     ('commutation_4b', 'commutation_4c')):
            results = [r for _, r in catalog.successors(load(a))]
            self.assertIn(load(b), results, f"{a} -> {b}")

    def test_application_text(self):
        pattern = generator_catalog().pattern('P6')
        self.assertEqual(str(MoveApplication(pattern, 0, 1)), 'P6@(0,1)')


class TestParsing(unittest.TestCase):

    def test_invalid_pattern(self):
        text = "2 BAD\n2\n2 0\n0 0\n2\n0 0\n0 0\n"
        with self.assertRaises(MosaicParseError):
            parse_catalog(text)

    def test_bad_header(self):
        with self.assertRaises(MosaicParseError):
            parse_catalog("two P1\n")

    def test_extra_catalog(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'extra.txt')
            with open(path, 'w', encoding='utf8') as fh:
                fh.write(P7_TEXT)
            catalog = load_catalog([path], include_default=False)
        self.assertTrue(catalog.patterns)
        for p in catalog:
            self.assertTrue(p.label.startswith('Q1'))
        self.assertIn(MovePattern(2, load('stabilization_1a'),
                                  load('stabilization_1b'), 'Q1'), catalog)
