"""Exhaustive generation of the knot n-mosaics."""
import logging
from functools import partial
from itertools import product
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from knotmosaic.errors import CapacityError, SideLengthError
from knotmosaic.mosaic import KnotMosaic, Mosaic, is_suitably_connected
from knotmosaic.tiles import EDGE_MASK, Edge, Tile

logger = logging.getLogger(__name__)

_N, _E, _S, _W = Edge.N.bit, Edge.E.bit, Edge.S.bit, Edge.W.bit


def _candidate_table():
    """Tiles admitted given (north needed, west needed, south open,
    east open), in increasing index order."""
    table = {}
    for north, west, south, east in product((False, True), repeat=4):
        tiles = []
        for t in Tile:
            mask = EDGE_MASK[t]
            if bool(mask & _N) != north or bool(mask & _W) != west:
                continue
            if (mask & _S and not south) or (mask & _E and not east):
                continue
            tiles.append(int(t))
        table[north, west, south, east] = tuple(tiles)
    return table


_CANDIDATES = _candidate_table()


def _check_side(n: int):
    if n < 1:
        raise SideLengthError(f"side length must be positive: {n}")


def row_major(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n)]


def column_major(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(n)]


def _backtrack(n: int, order: Sequence[Tuple[int, int]],
               prefix: Sequence[int] = ()) -> Iterator[Tuple[int, ...]]:
    """Fill cells in ``order``; each cell's upper and left neighbours must
    come earlier in ``order``. The first ``len(prefix)`` cells are fixed."""
    size = n * n
    cells = [0] * size
    slots = [i * n + j for i, j in order]

    def candidates(pos):
        i, j = order[pos]
        north = i > 0 and bool(EDGE_MASK[cells[(i - 1) * n + j]] & _S)
        west = j > 0 and bool(EDGE_MASK[cells[i * n + j - 1]] & _E)
        return _CANDIDATES[north, west, i < n - 1, j < n - 1]

    for pos, tile in enumerate(prefix):
        if tile not in candidates(pos):
            return
        cells[slots[pos]] = tile
    start = len(prefix)
    if start == size:
        yield tuple(cells)
        return
    stack = [iter(candidates(start))]
    while stack:
        pos = start + len(stack) - 1
        tile = next(stack[-1], None)
        if tile is None:
            stack.pop()
            continue
        cells[slots[pos]] = tile
        if pos == size - 1:
            yield tuple(cells)
        else:
            stack.append(iter(candidates(pos + 1)))


def first_rows(n: int) -> List[Tuple[int, ...]]:
    """Every admissible first row, in increasing order."""
    return list(_first_row_fillings(n))


def _first_row_fillings(n: int) -> Iterator[Tuple[int, ...]]:
    row = [0] * n

    def fill(j):
        if j == n:
            yield tuple(row)
            return
        west = j > 0 and bool(EDGE_MASK[row[j - 1]] & _E)
        for tile in _CANDIDATES[False, west, n > 1, j < n - 1]:
            row[j] = tile
            yield from fill(j + 1)
    yield from fill(0)


def _shard(n: int, prefix: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    return list(_backtrack(n, row_major(n), prefix))


def enumerate_knot_mosaics(n: int, jobs: int = 1,
                           progress=False) -> Iterator[KnotMosaic]:
    """Every suitably connected n-mosaic once, in increasing encoding order.

    With ``jobs > 1`` the first rows are distributed over a process pool and
    the shards are merged back in order, so the stream is the same.
    """
    _check_side(n)
    if jobs <= 1 or n < 3:
        stream = _backtrack(n, row_major(n))
        if progress:
            stream = tqdm(stream, desc=f"K({n})", unit=' mosaics')
        for cells in stream:
            yield KnotMosaic(n, cells)
        return
    prefixes = first_rows(n)
    logger.info("enumerating K(%d) over %d shards with %d jobs",
                n, len(prefixes), jobs)
    with Pool(jobs) as pool:
        shards = pool.imap(partial(_shard, n), prefixes)
        if progress:
            shards = tqdm(shards, total=len(prefixes), desc=f"K({n})",
                          unit=' shards')
        for shard in shards:
            for cells in shard:
                yield KnotMosaic(n, cells)


def enumerate_column_major(n: int) -> Iterator[KnotMosaic]:
    """Same set as ``enumerate_knot_mosaics`` in a different order."""
    _check_side(n)
    for cells in _backtrack(n, column_major(n)):
        yield KnotMosaic(n, cells)


def knot_mosaic_count(n: int, column_order=False) -> int:
    _check_side(n)
    order = column_major(n) if column_order else row_major(n)
    return sum(1 for _ in _backtrack(n, order))


def brute_force_count(n: int, limit: Optional[int] = 2) -> int:
    """Filter all 11^(n*n) fillings; only feasible for n <= 2."""
    if limit is not None and n > limit:
        raise CapacityError(f"brute force is limited to n <= {limit}")
    return sum(1 for cells in product(range(len(Tile)), repeat=n * n)
               if is_suitably_connected(Mosaic(n, cells)))
