"""Unit test package for knotmosaic."""
from pathlib import Path

from knotmosaic.mosaic import read_mosaic

FIXTURES = Path(__file__).parent / 'fixtures'


def fixture_path(name):
    return FIXTURES / f"{name}.mosaic"


def load(name):
    """A mosaic from the fixture directory, by file stem."""
    return read_mosaic(fixture_path(name))


def census(n):
    """The listed class representatives of the knot n-mosaics."""
    return [read_mosaic(path)
            for path in sorted(FIXTURES.glob(f"census_n{n}_*.mosaic"))]


KNOTS = ('knot_4_1', 'knot_5_1', 'knot_5_2', 'knot_6_2', 'knot_7_4')
