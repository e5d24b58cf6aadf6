#!/usr/bin/env python

"""Tests for `knotmosaic.tiles`."""

import unittest

from knotmosaic.tiles import (D4, D4_BY_NAME, IDENTITY, CROSSING_TILES,
                              D4Element, Edge, Tile, connection_profile,
                              tile_union, transform_tile)


class TestProfiles(unittest.TestCase):

    def test_endpoint_counts(self):
        counts = [len(connection_profile(t).endpoints) for t in Tile]
        self.assertEqual(counts, [0, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4])

    def test_crossing_tiles(self):
        self.assertEqual(CROSSING_TILES, {Tile.T9, Tile.T10})
        self.assertEqual(connection_profile(Tile.T9).over_strand,
                         {Edge.E, Edge.W})
        self.assertEqual(connection_profile(Tile.T10).over_strand,
                         {Edge.N, Edge.S})
        for t in Tile:
            if t not in CROSSING_TILES:
                self.assertIsNone(connection_profile(t).over_strand)

    def test_partner(self):
        t7 = connection_profile(Tile.T7)
        self.assertEqual(t7.partner(Edge.N), Edge.E)
        self.assertEqual(t7.partner(Edge.W), Edge.S)
        with self.assertRaises(KeyError):
            connection_profile(Tile.T5).partner(Edge.N)

    def test_edges(self):
        self.assertEqual(Edge.N.opposite, Edge.S)
        self.assertEqual(Edge.W.opposite, Edge.E)
        self.assertEqual(Edge.S.step, (1, 0))
        self.assertEqual(Edge.S.vector, (0, -1))


class TestDihedralAction(unittest.TestCase):

    def test_group(self):
        self.assertEqual(len(set(D4)), 8)
        for g in D4:
            self.assertEqual(g * g.inverse(), IDENTITY)
            for h in D4:
                self.assertIn(g * h, D4)
                for e in Edge:
                    self.assertEqual((g * h).edge(e), g.edge(h.edge(e)))

    def test_names(self):
        self.assertIs(D4_BY_NAME['id'], IDENTITY)
        self.assertIs(D4[0], IDENTITY)
        self.assertEqual(D4_BY_NAME['r1'], D4Element(1))
        self.assertEqual(D4Element(2, True).name, 'r2f')
        with self.assertRaises(ValueError):
            D4Element(4)

    def test_quarter_turn(self):
        quarter = D4Element(1)
        self.assertEqual(transform_tile(Tile.T1, quarter), Tile.T4)
        self.assertEqual(transform_tile(Tile.T5, quarter), Tile.T6)
        self.assertEqual(transform_tile(Tile.T9, quarter), Tile.T10)
        self.assertEqual(transform_tile(Tile.T7, quarter), Tile.T8)

    def test_reflection_keeps_crossing_type(self):
        flip = D4Element(0, True)
        self.assertEqual(transform_tile(Tile.T1, flip), Tile.T2)
        self.assertEqual(transform_tile(Tile.T9, flip), Tile.T9)
        self.assertEqual(transform_tile(Tile.T10, flip), Tile.T10)

    def test_inverse_undoes(self):
        for g in D4:
            for t in Tile:
                self.assertEqual(
                    transform_tile(transform_tile(t, g), g.inverse()), t)

    def test_block_positions(self):
        quarter = D4Element(1)
        self.assertEqual(quarter.position(0, 0, 3), (0, 2))
        self.assertEqual(quarter.position(0, 2, 3), (2, 2))
        self.assertEqual(D4Element(0, True).position(1, 0, 3), (1, 2))


class TestTileUnion(unittest.TestCase):

    def test_corner_arcs(self):
        self.assertEqual(tile_union(Tile.T1, Tile.T3), Tile.T7)
        self.assertEqual(tile_union(Tile.T2, Tile.T4), Tile.T8)
        self.assertEqual(tile_union(Tile.T0, Tile.T4), Tile.T4)

    def test_no_tile(self):
        self.assertIsNone(tile_union(Tile.T1, Tile.T2))
        self.assertIsNone(tile_union(Tile.T5, Tile.T6))
        self.assertIsNone(tile_union(Tile.T9, Tile.T0))
