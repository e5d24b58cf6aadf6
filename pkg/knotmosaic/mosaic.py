"""Square mosaics of tiles, knot mosaics and their text formats.

Cells are stored row-major as a tuple of tile indices. Row 0 is the top row
and column 0 the left column.

Text format::

    4
    0 2 1 0
    2 9 10 1
    6 3 9 4
    3 5 4 0

Inline format (census and record files): ``0 2 1 0;2 9 10 1;6 3 9 4;3 5 4 0``.
"""
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple

from knotmosaic.errors import (BoundsError, CapacityError, MosaicParseError,
                               NotSuitablyConnectedError)
from knotmosaic.tiles import (EDGE_MASK, D4Element, Edge, Tile,
                              transform_tile)

NUM_TILES = len(Tile)

# one character per tile, see ``render_ascii``
GLYPHS = ('.', '7', 'r', 'L', 'J', '-', '|', '/', '\\', '=', 'H')

# edges toward already scanned cells first, then the forward ones
_SCAN_ORDER = (Edge.W, Edge.N, Edge.E, Edge.S)


@dataclass(frozen=True, eq=False)
class Mosaic:
    n: int
    cells: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.cells) != self.n * self.n:
            raise ValueError(
                f"{len(self.cells)} cells do not fill a {self.n}-mosaic")

    def __eq__(self, other):
        if not isinstance(other, Mosaic):
            return NotImplemented
        return self.n == other.n and self.cells == other.cells

    def __hash__(self):
        return hash((self.n, self.cells))

    def __lt__(self, other):
        return self.encode() < other.encode()

    def __getitem__(self, position) -> Tile:
        i, j = position
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise BoundsError(f"cell ({i}, {j}) outside a {self.n}-mosaic")
        return Tile(self.cells[i * self.n + j])

    def __str__(self):
        return serialize_mosaic(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.n}, '{format_inline(self)}')"

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]):
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("mosaic rows must form a square")
        cells = tuple(int(c) for row in rows for c in row)
        if any(not 0 <= c < NUM_TILES for c in cells):
            raise ValueError("tile indices must lie in 0..10")
        return cls(n, cells)

    @classmethod
    def blank(cls, n: int):
        return cls(n, (0,) * (n * n))

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.n
        return tuple(self.cells[r * n:(r + 1) * n] for r in range(n))

    def count(self, *tiles) -> int:
        wanted = set(int(t) for t in tiles)
        return sum(1 for c in self.cells if c in wanted)

    def block(self, k: int, i: int, j: int) -> Tuple[int, ...]:
        """Cells of the k-submosaic at (i, j), without bounds checks."""
        n, cells = self.n, self.cells
        return tuple(cells[(i + r) * n + j + c]
                     for r in range(k) for c in range(k))

    def with_block(self, i: int, j: int, block: Sequence[int], k: int):
        cells = list(self.cells)
        n = self.n
        for r in range(k):
            cells[(i + r) * n + j:(i + r) * n + j + k] = \
                block[r * k:(r + 1) * k]
        return Mosaic(n, tuple(cells))

    def encode(self) -> bytes:
        """Header byte n, then nibble-packed cells (n <= 16) or one byte per
        cell. Byte order agrees with row-major order of the cells."""
        if self.n > 255:
            raise CapacityError(f"cannot encode a {self.n}-mosaic")
        if self.n <= 16:
            cells = self.cells + (0,) * (len(self.cells) % 2)
            body = bytes((a << 4) | b for a, b in zip(cells[0::2],
                                                       cells[1::2]))
        else:
            body = bytes(self.cells)
        return bytes((self.n,)) + body

    @classmethod
    def decode(cls, data: bytes):
        n = data[0]
        if n <= 16:
            cells = []
            for byte in data[1:]:
                cells.append(byte >> 4)
                cells.append(byte & 0x0F)
            return cls(n, tuple(cells[:n * n]))
        return cls(n, tuple(data[1:1 + n * n]))


class KnotMosaic(Mosaic):
    """A mosaic known to be suitably connected. Build one with ``certify``;
    the plain constructor trusts its caller."""

    @classmethod
    def certify(cls, mosaic: Mosaic) -> 'KnotMosaic':
        report = is_suitably_connected(mosaic)
        if not report:
            raise NotSuitablyConnectedError(
                f"not suitably connected: {report.violation}")
        return cls(mosaic.n, mosaic.cells)


class Violation(NamedTuple):
    row: int
    col: int
    edge: Edge

    def __str__(self):
        return f"({self.row},{self.col},{self.edge.name})"


@dataclass(frozen=True)
class Connectivity:
    ok: bool
    violation: Optional[Violation] = None

    def __bool__(self):
        return self.ok


def check_connectivity(mosaic: Mosaic, open_boundary=False) -> Connectivity:
    """Report the first cell edge whose connection point is unmatched.

    With ``open_boundary`` connection points on the outer boundary are
    allowed, which is the condition for tangle mosaics such as move sides and
    zoom blocks.
    """
    n, cells = mosaic.n, mosaic.cells
    for i in range(n):
        for j in range(n):
            mask = EDGE_MASK[cells[i * n + j]]
            for edge in _SCAN_ORDER:
                has = bool(mask & edge.bit)
                di, dj = edge.step
                ni, nj = i + di, j + dj
                if not (0 <= ni < n and 0 <= nj < n):
                    if has and not open_boundary:
                        return Connectivity(False, Violation(i, j, edge))
                    continue
                other = EDGE_MASK[cells[ni * n + nj]] & edge.opposite.bit
                if has != bool(other):
                    return Connectivity(False, Violation(i, j, edge))
    return Connectivity(True)


def is_suitably_connected(mosaic: Mosaic) -> Connectivity:
    return check_connectivity(mosaic)


def boundary_profile(mosaic: Mosaic) -> Tuple[bool, ...]:
    """Connection points on the outer boundary: top edge left to right, right
    edge top to bottom, bottom edge left to right, left edge top to bottom."""
    n, cells = mosaic.n, mosaic.cells
    top = [EDGE_MASK[cells[j]] & Edge.N.bit for j in range(n)]
    right = [EDGE_MASK[cells[i * n + n - 1]] & Edge.E.bit for i in range(n)]
    bottom = [EDGE_MASK[cells[(n - 1) * n + j]] & Edge.S.bit
              for j in range(n)]
    left = [EDGE_MASK[cells[i * n]] & Edge.W.bit for i in range(n)]
    return tuple(bool(x) for x in top + right + bottom + left)


def submosaic(mosaic: Mosaic, k: int, i: int, j: int) -> Mosaic:
    if not (1 <= k <= mosaic.n and 0 <= i <= mosaic.n - k
            and 0 <= j <= mosaic.n - k):
        raise BoundsError(
            f"{k}-submosaic at ({i}, {j}) outside a {mosaic.n}-mosaic")
    return Mosaic(k, mosaic.block(k, i, j))


def inject(mosaic: Mosaic, times: int = 1) -> Mosaic:
    """Pad with blank tiles on the right and bottom, ``times`` times."""
    if times == 0:
        return mosaic
    m = mosaic.n + times
    cells = []
    for row in mosaic.rows:
        cells.extend(row)
        cells.extend((0,) * times)
    cells.extend((0,) * (m * times))
    result = Mosaic(m, tuple(cells))
    if isinstance(mosaic, KnotMosaic):
        return KnotMosaic(result.n, result.cells)
    return result


def transform(mosaic: Mosaic, g: D4Element) -> Mosaic:
    n = mosaic.n
    cells = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            r, c = g.position(i, j, n)
            cells[r * n + c] = transform_tile(mosaic.cells[i * n + j], g)
    return Mosaic(n, tuple(int(c) for c in cells))


def _parse_row(line: str, lineno: int, n: int):
    row = []
    column = 1
    for token in line.split(' '):
        if token:
            try:
                tile = int(token)
            except ValueError:
                raise MosaicParseError(f"not a tile index: {token!r}",
                                       lineno, column)
            if not 0 <= tile < NUM_TILES:
                raise MosaicParseError(f"tile index out of range: {tile}",
                                       lineno, column)
            row.append(tile)
        column += len(token) + 1
    if len(row) != n:
        raise MosaicParseError(f"expected {n} tiles, found {len(row)}",
                               lineno)
    return row


def parse_mosaic(text: str, first_line: int = 1) -> Mosaic:
    lines = text.replace('\t', ' ').split('\n')
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MosaicParseError("empty mosaic text", first_line)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise MosaicParseError(f"expected the side length, got {lines[0]!r}",
                               first_line, 1)
    if n < 1:
        raise MosaicParseError(f"side length must be positive: {n}",
                               first_line, 1)
    if len(lines) - 1 < n:
        raise MosaicParseError(
            f"expected {n} rows, found {len(lines) - 1}",
            first_line + len(lines))
    if len(lines) - 1 > n:
        raise MosaicParseError("unexpected text after the last row",
                               first_line + n + 1)
    rows = [_parse_row(line, first_line + k, n)
            for k, line in enumerate(lines[1:], start=1)]
    return Mosaic.from_rows(rows)


def serialize_mosaic(mosaic: Mosaic) -> str:
    body = '\n'.join(' '.join(str(c) for c in row) for row in mosaic.rows)
    return f"{mosaic.n}\n{body}\n"


def format_inline(mosaic: Mosaic) -> str:
    return ';'.join(' '.join(str(c) for c in row) for row in mosaic.rows)


def parse_inline(text: str) -> Mosaic:
    chunks = text.strip().split(';')
    rows = [_parse_row(chunk, k, len(chunks))
            for k, chunk in enumerate(chunks, start=1)]
    return Mosaic.from_rows(rows)


def render_ascii(mosaic: Mosaic) -> str:
    r"""One line per row, one glyph per tile; T0 to T10 draw as
    ``. 7 r L J - | / \ = H``."""
    return '\n'.join(''.join(GLYPHS[c] for c in row)
                     for row in mosaic.rows) + '\n'


def read_mosaic(path) -> Mosaic:
    with open(path, encoding='utf8') as fh:
        return parse_mosaic(fh.read())
