#!/usr/bin/env python

"""Tests for `knotmosaic.grid`."""

import random
import unittest
from itertools import permutations

from knotmosaic.errors import MosaicParseError, MoveNotApplicableError
from knotmosaic.grid import (COLUMNS, CORNERS, KINDS, ROWS, ElementaryMove,
                             GridDiagram, can_commute, canonical_orientation,
                             commute, cyclic_permute, destabilization_site,
                             destabilize, elementary_move_as_certificate,
                             grid_components, grid_fingerprint,
                             grid_to_mosaic, inverse_move, mosaic_to_grid,
                             neighbours, parse_grid, parse_move,
                             serialize_grid, stabilize, validate_grid)
from knotmosaic.invariants import crossing_count, fingerprint
from knotmosaic.mosaic import Mosaic, is_suitably_connected
from knotmosaic.search import verify

from tests import census, load

UNKNOT = GridDiagram((2, 1), (1, 2))
# two unknots side by side, columns 1 and 2 commute
UNLINK = GridDiagram((1, 3, 2, 4), (2, 4, 1, 3))
MAX_SIZE = 7
# random 7-grids can carry more crossings than the default cap
CAP = 64


def random_grid(rng, n):
    while True:
        xs = list(range(1, n + 1))
        os_ = list(range(1, n + 1))
        rng.shuffle(xs)
        rng.shuffle(os_)
        if all(x != o for x, o in zip(xs, os_)):
            return GridDiagram(tuple(xs), tuple(os_))


class TestGridText(unittest.TestCase):

    def test_round_trip(self):
        text = "2\nX: 2 1\nO: 1 2\n"
        self.assertEqual(parse_grid(text), UNKNOT)
        self.assertEqual(serialize_grid(UNKNOT), text)

    def test_empty(self):
        self.assertEqual(serialize_grid(GridDiagram.empty()), "0\nX:\nO:\n")
        self.assertEqual(parse_grid("0\nX:\nO:\n"), GridDiagram.empty())

    def test_malformed(self):
        for text in ("2\nX: 2 1\n", "2\nX: 2 1\nY: 1 2\n",
                     "2\nX: 2 1\nO: 1\n", "two\nX: 2 1\nO: 1 2\n",
                     "2\nX: 2 a\nO: 1 2\n"):
            with self.assertRaises(MosaicParseError):
                parse_grid(text)

    def test_validate(self):
        self.assertEqual(validate_grid(UNKNOT), (True, []))
        ok, problems = validate_grid(GridDiagram((1, 1), (2, 2)))
        self.assertFalse(ok)
        self.assertEqual(len(problems), 2)
        ok, problems = validate_grid(GridDiagram((1, 2), (1, 2)))
        self.assertFalse(ok)
        self.assertIn('share', problems[0])

    def test_move_specs(self):
        for spec in ('commute:columns:2', 'cyclic:rows:-1',
                     'stabilize:3:X:NE', 'destabilize:2:3', 'identity'):
            self.assertEqual(str(parse_move(spec)), spec)
        for spec in ('commute:diagonal:1', 'stabilize:1:Y:NE', 'spin:1'):
            with self.assertRaises(MosaicParseError):
                parse_move(spec)


class TestGridMoves(unittest.TestCase):

    def test_cyclic(self):
        self.assertEqual(cyclic_permute(UNKNOT), GridDiagram((1, 2), (2, 1)))
        self.assertEqual(cyclic_permute(UNKNOT, ROWS),
                         GridDiagram((1, 2), (2, 1)))
        grid = GridDiagram((1, 3, 2, 4), (2, 4, 1, 3))
        self.assertEqual(cyclic_permute(cyclic_permute(grid, COLUMNS, 3),
                                        COLUMNS, -3), grid)
        self.assertEqual(cyclic_permute(grid, ROWS, 4), grid)

    def test_commute(self):
        self.assertTrue(can_commute(UNLINK, COLUMNS, 1))
        self.assertEqual(commute(UNLINK, COLUMNS, 1),
                         GridDiagram((3, 1, 2, 4), (4, 2, 1, 3)))
        self.assertFalse(can_commute(UNLINK, COLUMNS, 4))

    def test_interleaved_columns(self):
        grid = GridDiagram((1, 2, 3, 4), (3, 4, 1, 2))
        self.assertTrue(validate_grid(grid)[0])
        self.assertFalse(can_commute(grid, COLUMNS, 1, allow_nested=True))
        with self.assertRaises(MoveNotApplicableError):
            commute(grid, COLUMNS, 1)

    def test_nested_columns(self):
        grid = GridDiagram((1, 2, 4, 3), (4, 3, 1, 2))
        self.assertTrue(validate_grid(grid)[0])
        self.assertFalse(can_commute(grid, COLUMNS, 1))
        self.assertTrue(can_commute(grid, COLUMNS, 1, allow_nested=True))
        swapped = commute(grid, COLUMNS, 1, allow_nested=True)
        self.assertEqual(swapped, GridDiagram((2, 1, 4, 3), (3, 4, 1, 2)))

    def test_row_commute(self):
        grid = UNLINK.transpose()
        self.assertTrue(can_commute(grid, ROWS, 1))
        self.assertEqual(commute(grid, ROWS, 1),
                         commute(UNLINK, COLUMNS, 1).transpose())

    def test_stabilize_unknot(self):
        grid = stabilize(UNKNOT, 1, 'X', 'SW')
        self.assertEqual(grid, GridDiagram((3, 2, 1), (1, 3, 2)))
        self.assertEqual(destabilization_site(grid, 1, 2), ('X', 'SW'))
        self.assertEqual(destabilize(grid, 1, 2), UNKNOT)

    def test_stabilize_errors(self):
        with self.assertRaises(MoveNotApplicableError):
            stabilize(UNKNOT, 3, 'X', 'SW')
        with self.assertRaises(MoveNotApplicableError):
            destabilize(UNKNOT, 1, 1)
        self.assertIsNone(destabilization_site(UNKNOT, 2, 1))

    def test_stabilization_round_trips(self):
        rng = random.Random(11)
        for _ in range(15):
            grid = random_grid(rng, rng.randrange(2, 5))
            for column in range(1, grid.N + 1):
                for kind in KINDS:
                    for corner in CORNERS:
                        move = ElementaryMove('stabilize',
                                              (column, kind, corner))
                        bigger = move.apply(grid)
                        self.assertEqual(bigger.N, grid.N + 1)
                        self.assertTrue(validate_grid(bigger)[0])
                        back = inverse_move(grid, move)
                        self.assertEqual(back.apply(bigger), grid)
                        self.assertEqual(inverse_move(bigger, back), move)

    def test_moves_keep_fingerprint(self):
        rng = random.Random(5)
        trials = 0
        while trials < 1000:
            grid = random_grid(rng, rng.randrange(2, 7))
            expected = fingerprint(grid_to_mosaic(grid), cap=CAP)
            options = list(neighbours(grid, MAX_SIZE))
            options += [(f"cyclic:{axis}:{step}",
                         cyclic_permute(grid, axis, step))
                        for axis in (ROWS, COLUMNS) for step in (1, -1)]
            for move, result in rng.sample(options, min(5, len(options))):
                self.assertTrue(validate_grid(result)[0], str(move))
                self.assertLessEqual(result.N, MAX_SIZE)
                self.assertEqual(fingerprint(grid_to_mosaic(result), cap=CAP),
                                 expected, str(move))
                self.assertEqual(len(grid_components(result)),
                                 len(grid_components(grid)))
                trials += 1
            axis = rng.choice((ROWS, COLUMNS))
            index = rng.randrange(1, grid.N)
            if not can_commute(grid, axis, index):
                with self.assertRaises(MoveNotApplicableError):
                    commute(grid, axis, index)

    def test_identity(self):
        self.assertEqual(parse_move('identity').apply(UNLINK), UNLINK)


class TestGridsAndMosaics(unittest.TestCase):

    def test_unknot(self):
        self.assertEqual(grid_to_mosaic(UNKNOT),
                         Mosaic.from_rows([[2, 1], [3, 4]]))
        self.assertEqual(mosaic_to_grid(load('census_n2_1')), UNKNOT)
        self.assertEqual(grid_fingerprint(UNKNOT),
                         fingerprint(load('census_n2_1')))

    def test_grid_mosaics(self):
        rng = random.Random(2)
        for _ in range(20):
            grid = random_grid(rng, rng.randrange(2, 7))
            m = grid_to_mosaic(grid)
            self.assertTrue(is_suitably_connected(m))
            self.assertEqual(m.count(7, 8, 9), 0)
            self.assertEqual(fingerprint(m).component_count,
                             len(grid_components(grid)))

    def test_canonical_round_trip(self):
        rng = random.Random(4)
        for _ in range(20):
            grid = canonical_orientation(random_grid(rng, rng.randrange(2, 7)))
            self.assertEqual(canonical_orientation(grid), grid)
            self.assertEqual(mosaic_to_grid(grid_to_mosaic(grid)), grid)

    def test_every_small_grid_round_trips(self):
        seen = 0
        for n in range(2, 5):
            for xs in permutations(range(1, n + 1)):
                for os_ in permutations(range(1, n + 1)):
                    if any(x == o for x, o in zip(xs, os_)):
                        continue
                    grid = GridDiagram(xs, os_)
                    canonical = canonical_orientation(grid)
                    mosaic = grid_to_mosaic(grid)
                    self.assertEqual(grid_to_mosaic(canonical), mosaic)
                    self.assertEqual(mosaic_to_grid(mosaic), canonical)
                    seen += 1
        self.assertEqual(seen, 230)

    def test_mosaic_round_trip_keeps_knot(self):
        for m in census(4)[1:] + [load('example_2')]:
            grid = mosaic_to_grid(m)
            self.assertTrue(validate_grid(grid)[0])
            back = grid_to_mosaic(grid)
            self.assertEqual(crossing_count(back), crossing_count(m))
            self.assertEqual(fingerprint(back), fingerprint(m))

    def test_blank(self):
        self.assertEqual(mosaic_to_grid(Mosaic.blank(3)), GridDiagram.empty())
        with self.assertRaises(MoveNotApplicableError):
            grid_to_mosaic(GridDiagram.empty())

    def test_components(self):
        self.assertEqual(grid_components(UNKNOT), [[1, 2]])
        self.assertEqual(len(grid_components(UNLINK)), 2)


class TestCertifiedGridMoves(unittest.TestCase):

    def test_cyclic_unknot(self):
        result = elementary_move_as_certificate(UNKNOT,
                                                parse_move('cyclic:columns:1'))
        self.assertTrue(result.found)
        self.assertEqual(len(result.certificate), 0)

    def test_commutation(self):
        move = parse_move('commute:columns:1')
        result = elementary_move_as_certificate(UNLINK, move)
        self.assertTrue(result.found)
        self.assertTrue(verify(result.certificate, grid_to_mosaic(UNLINK),
                               grid_to_mosaic(move.apply(UNLINK))))

    def test_stabilization(self):
        move = parse_move('stabilize:1:X:SW')
        result = elementary_move_as_certificate(UNKNOT, move)
        self.assertTrue(result.found)
        self.assertTrue(verify(result.certificate, grid_to_mosaic(UNKNOT),
                               grid_to_mosaic(move.apply(UNKNOT))))
