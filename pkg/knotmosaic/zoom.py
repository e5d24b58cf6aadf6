"""The 5x zoom: every tile becomes a 5x5 block free of T7, T8 and T9."""
import logging
from functools import lru_cache
from typing import Dict, Tuple

from knotmosaic.errors import MosaicParseError
from knotmosaic.mosaic import (Mosaic, boundary_profile, check_connectivity,
                               parse_mosaic)
from knotmosaic.moves import DATA_DIR
from knotmosaic.search import find_certificate
from knotmosaic.tiles import Edge, Tile, connection_profile

logger = logging.getLogger(__name__)

BLOCKS_FILE = DATA_DIR / 'zoom_blocks.txt'
RATIO = 5
_MID = RATIO // 2


def expected_profile(tile, k: int = RATIO) -> Tuple[bool, ...]:
    """Boundary profile of a k-block whose only boundary connection points
    are the tile's endpoints at the mid-edges."""
    endpoints = connection_profile(tile).endpoints
    profile = [False] * (4 * k)
    for side, edge in enumerate((Edge.N, Edge.E, Edge.S, Edge.W)):
        if edge in endpoints:
            profile[side * k + k // 2] = True
    return tuple(profile)


def parse_blocks(text: str, source: str = '<blocks>') -> Dict[Tile, Mosaic]:
    lines = text.split('\n')
    blocks = {}
    lineno = 0
    while lineno < len(lines):
        line = lines[lineno].strip()
        if not line or line.startswith('#'):
            lineno += 1
            continue
        header = line.split()
        if len(header) != 2 or header[0] != 'tile':
            raise MosaicParseError(f"{source}: expected 'tile <index>'",
                                   lineno + 1)
        tile = Tile(int(header[1]))
        chunk = '\n'.join(lines[lineno + 1:lineno + RATIO + 2])
        blocks[tile] = parse_mosaic(chunk, first_line=lineno + 2)
        lineno += RATIO + 2
    return blocks


@lru_cache(maxsize=None)
def block_table() -> Tuple[Mosaic, ...]:
    with open(BLOCKS_FILE, encoding='utf8') as fh:
        blocks = parse_blocks(fh.read(), str(BLOCKS_FILE))
    for tile in Tile:
        block = blocks.get(tile)
        if block is None or block.n != RATIO:
            raise MosaicParseError(f"{BLOCKS_FILE}: no 5x5 block for {tile}")
        if boundary_profile(block) != expected_profile(tile) or \
                not check_connectivity(block, open_boundary=True):
            raise MosaicParseError(
                f"{BLOCKS_FILE}: block for {tile.name} does not match its "
                f"connection profile")
    logger.debug("loaded %d zoom blocks from %s", len(blocks), BLOCKS_FILE)
    return tuple(blocks[t] for t in Tile)


def zoom_block(tile) -> Mosaic:
    return block_table()[Tile(tile)]


def zoom5(mosaic: Mosaic) -> Mosaic:
    n, size = mosaic.n, mosaic.n * RATIO
    blocks = block_table()
    cells = [0] * (size * size)
    for i in range(n):
        for j in range(n):
            block = blocks[mosaic.cells[i * n + j]].cells
            for r in range(RATIO):
                start = (i * RATIO + r) * size + j * RATIO
                cells[start:start + RATIO] = block[r * RATIO:(r + 1) * RATIO]
    return type(mosaic)(size, tuple(cells))


def centered_block(tile) -> Mosaic:
    """The tile at the centre of a 5x5 block, with straight spokes out to its
    endpoints."""
    cells = [0] * (RATIO * RATIO)
    cells[_MID * RATIO + _MID] = int(tile)
    endpoints = connection_profile(tile).endpoints
    for k in range(_MID):
        if Edge.N in endpoints:
            cells[k * RATIO + _MID] = Tile.T6
        if Edge.S in endpoints:
            cells[(RATIO - 1 - k) * RATIO + _MID] = Tile.T6
        if Edge.W in endpoints:
            cells[_MID * RATIO + k] = Tile.T5
        if Edge.E in endpoints:
            cells[_MID * RATIO + RATIO - 1 - k] = Tile.T5
    return Mosaic(RATIO, tuple(int(c) for c in cells))


def lemma_certificate(tile, max_depth: int = 12, catalog=None):
    """Search a move sequence turning ``zoom_block(tile)`` into
    ``centered_block(tile)``."""
    return find_certificate(zoom_block(tile), centered_block(tile),
                            max_depth=max_depth, max_pad=0, catalog=catalog)


def is_zoom_free(mosaic: Mosaic) -> bool:
    return mosaic.count(Tile.T7, Tile.T8, Tile.T9) == 0

