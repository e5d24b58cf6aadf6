"""Mosaic moves: involutive substitutions of small blocks.

The generator catalog is read from ``data/catalog.txt`` (planar isotopy
patterns P1-P11, Reidemeister patterns R1-R3, the crossing turn C1 and the
loop rearrangement U1) and closed twice:

* under the dihedral group acting on the block, and
* under corner-arc superposition: wherever a block corner cell is blank or
  carries the opposite corner arc on both sides, the arc hugging that corner
  may be added to both sides. The added arc meets nothing else, so the
  variant is again an isotopy of the block.

Variant labels record provenance, e.g. ``P6.r1+ne`` is P6 rotated a quarter
turn with an arc added in the north-east corner.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from knotmosaic.config import get_settings
from knotmosaic.errors import BoundsError, MosaicParseError
from knotmosaic.mosaic import (Mosaic, boundary_profile, check_connectivity,
                               parse_mosaic, transform)
from knotmosaic.tiles import D4, IDENTITY, CORNER_ARCS, Edge, tile_union

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / 'data'
CATALOG_FILE = DATA_DIR / 'catalog.txt'

_CORNERS = (('nw', (Edge.N, Edge.W)), ('ne', (Edge.N, Edge.E)),
            ('sw', (Edge.S, Edge.W)), ('se', (Edge.S, Edge.E)))


@dataclass(frozen=True)
class MovePattern:
    k: int
    side_a: Mosaic
    side_b: Mosaic
    label: str

    @property
    def key(self):
        return self.k, frozenset((self.side_a.cells, self.side_b.cells))

    def is_consistent(self) -> bool:
        return (self.side_a != self.side_b
                and self.side_a.n == self.side_b.n == self.k
                and boundary_profile(self.side_a)
                == boundary_profile(self.side_b))

    def transformed(self, g) -> 'MovePattern':
        label = self.label if g == IDENTITY else f"{self.label}.{g.name}"
        return MovePattern(self.k, transform(self.side_a, g),
                           transform(self.side_b, g), label)


@dataclass(frozen=True)
class MoveApplication:
    pattern: MovePattern
    i: int
    j: int

    def __str__(self):
        return f"{self.pattern.label}@({self.i},{self.j})"


def _corner_cell(k: int, corner: str) -> int:
    row = 0 if corner[0] == 'n' else k - 1
    col = 0 if corner[1] == 'w' else k - 1
    return row * k + col


def corner_variants(pattern: MovePattern) -> List[MovePattern]:
    """Every way of adding block-corner arcs to both sides of ``pattern``."""
    k = pattern.k
    eligible = []
    for name, edges in _CORNERS:
        cell = _corner_cell(k, name)
        arc = CORNER_ARCS[frozenset(edges)]
        a = tile_union(pattern.side_a.cells[cell], arc)
        b = tile_union(pattern.side_b.cells[cell], arc)
        if a is not None and b is not None:
            eligible.append((name, cell, int(a), int(b)))
    variants = []
    for size in range(1, len(eligible) + 1):
        for chosen in combinations(eligible, size):
            side_a = list(pattern.side_a.cells)
            side_b = list(pattern.side_b.cells)
            for _, cell, a, b in chosen:
                side_a[cell], side_b[cell] = a, b
            suffix = ''.join('+' + name for name, _, _, _ in chosen)
            variants.append(MovePattern(k, Mosaic(k, tuple(side_a)),
                                        Mosaic(k, tuple(side_b)),
                                        pattern.label + suffix))
    return variants


def close_patterns(base: Iterable[MovePattern]) -> List[MovePattern]:
    """Symmetry and corner-arc closure of ``base``, deduplicated as unordered
    pairs, first occurrence kept."""
    seen = set()
    closed = []
    for pattern in base:
        for g in D4:
            image = pattern.transformed(g)
            for variant in [image] + corner_variants(image):
                if variant.key in seen:
                    continue
                if not variant.is_consistent():
                    logger.debug("dropping inconsistent variant %s",
                                 variant.label)
                    continue
                seen.add(variant.key)
                closed.append(variant)
    return closed


def parse_catalog(text: str, source: str = '<catalog>') -> List[MovePattern]:
    lines = text.split('\n')
    patterns = []
    lineno = 0
    while lineno < len(lines):
        line = lines[lineno].strip()
        if not line or line.startswith('#'):
            lineno += 1
            continue
        header = line.split()
        try:
            k, label = int(header[0]), header[1]
        except (ValueError, IndexError):
            raise MosaicParseError(f"{source}: expected 'k label'",
                                   lineno + 1)
        first = lineno + 2
        sides = []
        for offset in (0, k + 1):
            start = lineno + 1 + offset
            chunk = '\n'.join(lines[start:start + k + 1])
            sides.append(parse_mosaic(chunk, first_line=first + offset))
        pattern = MovePattern(k, sides[0], sides[1], label)
        if not pattern.is_consistent() or not all(
                check_connectivity(side, open_boundary=True)
                for side in sides):
            raise MosaicParseError(
                f"{source}: pattern {label} is not a valid move", lineno + 1)
        patterns.append(pattern)
        lineno += 2 * (k + 1) + 1
    return patterns


def read_catalog(path) -> List[MovePattern]:
    with open(path, encoding='utf8') as fh:
        return parse_catalog(fh.read(), str(path))


class MoveCatalog:
    """Closed pattern set indexed by side contents."""

    def __init__(self, patterns: Sequence[MovePattern]):
        self.patterns = tuple(patterns)
        self.by_label: Dict[str, MovePattern] = {
            p.label: p for p in self.patterns}
        self._index: Dict[int, Dict[tuple, list]] = {}
        for p in self.patterns:
            index = self._index.setdefault(p.k, {})
            index.setdefault(p.side_a.cells, []).append((p, p.side_b.cells))
            index.setdefault(p.side_b.cells, []).append((p, p.side_a.cells))
        self.sizes = tuple(sorted(self._index))
        self._keys = frozenset(p.key for p in self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __contains__(self, pattern: MovePattern):
        return pattern.key in self._keys

    def pattern(self, label: str) -> Optional[MovePattern]:
        return self.by_label.get(label)

    def successors(self, mosaic: Mosaic) -> Iterator[
            Tuple[MoveApplication, Mosaic]]:
        """Each move that changes ``mosaic``, with its result, ordered by
        location then catalog order."""
        n = mosaic.n
        for k in self.sizes:
            index = self._index[k]
            for i in range(n - k + 1):
                for j in range(n - k + 1):
                    hits = index.get(mosaic.block(k, i, j))
                    if not hits:
                        continue
                    for pattern, replacement in hits:
                        yield (MoveApplication(pattern, i, j),
                               mosaic.with_block(i, j, replacement, k))

    def applicable(self, mosaic: Mosaic) -> List[MoveApplication]:
        return [app for app, _ in self.successors(mosaic)]


def apply_move(mosaic: Mosaic, app: MoveApplication) -> Mosaic:
    k, n = app.pattern.k, mosaic.n
    if not (0 <= app.i <= n - k and 0 <= app.j <= n - k):
        raise BoundsError(f"{app} outside a {n}-mosaic")
    block = mosaic.block(k, app.i, app.j)
    if block == app.pattern.side_a.cells:
        replacement = app.pattern.side_b.cells
    elif block == app.pattern.side_b.cells:
        replacement = app.pattern.side_a.cells
    else:
        return mosaic
    result = mosaic.with_block(app.i, app.j, replacement, k)
    return type(mosaic)(result.n, result.cells)


def load_catalog(paths: Iterable = (), include_default=True) -> MoveCatalog:
    base = read_catalog(CATALOG_FILE) if include_default else []
    for path in paths:
        base.extend(read_catalog(path))
    catalog = MoveCatalog(close_patterns(base))
    logger.info("move catalog: %d base patterns, %d after closure",
                len(base), len(catalog))
    return catalog


@lru_cache(maxsize=None)
def generator_catalog() -> MoveCatalog:
    return load_catalog(get_settings().catalog_extra)


def applicable_moves(mosaic: Mosaic,
                     catalog: MoveCatalog = None) -> List[MoveApplication]:
    if catalog is None:
        catalog = generator_catalog()
    return catalog.applicable(mosaic)
