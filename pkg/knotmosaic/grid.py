"""Grid diagrams, their elementary moves, and the passage between grids and
mosaics.

A grid of size N places, in column i (1-based, left to right), an X at row
``sigma_x[i-1]`` and an O at row ``sigma_o[i-1]``; rows are counted from the
bottom. Vertical segments run from X to O, horizontal ones from O to X, and
vertical segments cross over horizontal ones.

Grid column i is mosaic column i-1 and grid row r is mosaic row N-r, so the
top row of the grid is the first row of its mosaic.

Grid text format::

    2
    X: 2 1
    O: 1 2
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from knotmosaic.errors import MosaicParseError, MoveNotApplicableError
from knotmosaic.invariants import fingerprint, trace_strands
from knotmosaic.mosaic import KnotMosaic, Mosaic
from knotmosaic.moves import MoveCatalog
from knotmosaic.search import (MoveCertificate, SearchResult, Status, chain,
                               find_certificate)
from knotmosaic.tiles import CORNER_ARCS, Edge, Tile
from knotmosaic.zoom import zoom5

logger = logging.getLogger(__name__)

ROWS, COLUMNS = 'rows', 'columns'
CORNERS = {'SW': (0, 0), 'SE': (1, 0), 'NW': (0, 1), 'NE': (1, 1)}
KINDS = ('X', 'O')


@dataclass(frozen=True)
class GridDiagram:
    sigma_x: Tuple[int, ...]
    sigma_o: Tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.sigma_x)

    @classmethod
    def empty(cls) -> 'GridDiagram':
        return cls((), ())

    def sigma(self, kind: str) -> Tuple[int, ...]:
        return self.sigma_x if kind == 'X' else self.sigma_o

    def decorations(self) -> Dict[Tuple[int, int], str]:
        """(column, row) -> 'X' or 'O'."""
        marks = {}
        for i, (x, o) in enumerate(zip(self.sigma_x, self.sigma_o), start=1):
            marks[i, x] = 'X'
            marks[i, o] = 'O'
        return marks

    def transpose(self) -> 'GridDiagram':
        """Exchange rows and columns; used to run row moves as column
        moves."""
        return GridDiagram(_inverse(self.sigma_x), _inverse(self.sigma_o))

    def __str__(self):
        return serialize_grid(self)


def _inverse(sigma: Tuple[int, ...]) -> Tuple[int, ...]:
    inverse = [0] * len(sigma)
    for i, value in enumerate(sigma, start=1):
        inverse[value - 1] = i
    return tuple(inverse)


def validate_grid(grid: GridDiagram) -> Tuple[bool, List[str]]:
    problems = []
    n = len(grid.sigma_x)
    if len(grid.sigma_o) != n:
        problems.append(
            f"X has {n} columns, O has {len(grid.sigma_o)}")
        return False, problems
    expected = set(range(1, n + 1))
    for kind in KINDS:
        sigma = grid.sigma(kind)
        if set(sigma) != expected:
            problems.append(f"{kind} is not a permutation of 1..{n}")
    for i, (x, o) in enumerate(zip(grid.sigma_x, grid.sigma_o), start=1):
        if x == o:
            problems.append(f"X and O share the square ({i}, {x})")
    return not problems, problems


def _checked(grid: GridDiagram) -> GridDiagram:
    ok, problems = validate_grid(grid)
    if not ok:
        raise MoveNotApplicableError('; '.join(problems))
    return grid


def parse_grid(text: str) -> GridDiagram:
    lines = [line.strip() for line in text.split('\n') if line.strip()]
    if len(lines) != 3:
        raise MosaicParseError(
            f"expected 3 lines (N, X:, O:), found {len(lines)}", 1)
    try:
        n = int(lines[0])
    except ValueError:
        raise MosaicParseError(f"expected the grid size, got {lines[0]!r}", 1)
    sigmas = {}
    for lineno, line in enumerate(lines[1:], start=2):
        kind, sep, body = line.partition(':')
        if not sep or kind.strip() not in KINDS:
            raise MosaicParseError(f"expected 'X:' or 'O:', got {line!r}",
                                   lineno)
        try:
            sigmas[kind.strip()] = tuple(int(v) for v in body.split())
        except ValueError:
            raise MosaicParseError(f"not a row index in {line!r}", lineno)
        if len(sigmas[kind.strip()]) != n:
            raise MosaicParseError(
                f"expected {n} rows, found {len(sigmas[kind.strip()])}",
                lineno)
    if set(sigmas) != set(KINDS):
        raise MosaicParseError("need one X: and one O: line", 2)
    return GridDiagram(sigmas['X'], sigmas['O'])


def serialize_grid(grid: GridDiagram) -> str:
    def row(values):
        return ' '.join(str(v) for v in values)
    return (f"{grid.N}\nX: {row(grid.sigma_x)}\n"
            f"O: {row(grid.sigma_o)}\n").replace(': \n', ':\n')


def read_grid(path) -> GridDiagram:
    with open(path, encoding='utf8') as fh:
        return parse_grid(fh.read())


# --- elementary moves --------------------------------------------------------

def cyclic_permute(grid: GridDiagram, axis: str = COLUMNS,
                   direction: int = 1) -> GridDiagram:
    """Shift every column (row) by ``direction`` places, wrapping around."""
    n = grid.N
    if n == 0:
        return grid
    if axis == ROWS:
        def shift(sigma):
            return tuple((r - 1 + direction) % n + 1 for r in sigma)
        return GridDiagram(shift(grid.sigma_x), shift(grid.sigma_o))
    k = direction % n
    return GridDiagram(grid.sigma_x[-k:] + grid.sigma_x[:-k] if k else
                       grid.sigma_x,
                       grid.sigma_o[-k:] + grid.sigma_o[:-k] if k else
                       grid.sigma_o)


def _interval(grid: GridDiagram, column: int) -> Tuple[int, int]:
    x, o = grid.sigma_x[column - 1], grid.sigma_o[column - 1]
    return min(x, o), max(x, o)


def can_commute(grid: GridDiagram, axis: str, index: int,
                allow_nested=False) -> bool:
    if axis == ROWS:
        return can_commute(grid.transpose(), COLUMNS, index, allow_nested)
    if not 1 <= index < grid.N:
        return False
    lo_a, hi_a = _interval(grid, index)
    lo_b, hi_b = _interval(grid, index + 1)
    if hi_a < lo_b or hi_b < lo_a:
        return True
    nested = (lo_a < lo_b and hi_b < hi_a) or (lo_b < lo_a and hi_a < hi_b)
    return allow_nested and nested


def commute(grid: GridDiagram, axis: str, index: int,
            allow_nested=False) -> GridDiagram:
    """Swap columns (rows) ``index`` and ``index + 1``. By default the
    decorations of one must lie strictly above (right of) those of the
    other; ``allow_nested`` also accepts one interval inside the other."""
    if not can_commute(grid, axis, index, allow_nested):
        raise MoveNotApplicableError(
            f"{axis} {index} and {index + 1} of a {grid.N}-grid do not "
            f"commute")
    if axis == ROWS:
        return commute(grid.transpose(), COLUMNS, index,
                       allow_nested).transpose()

    def swap(sigma):
        values = list(sigma)
        values[index - 1], values[index] = values[index], values[index - 1]
        return tuple(values)
    return GridDiagram(swap(grid.sigma_x), swap(grid.sigma_o))


def _other(kind: str) -> str:
    return 'O' if kind == 'X' else 'X'


def stabilize(grid: GridDiagram, column: int, kind: str,
              corner: str) -> GridDiagram:
    """Replace the ``kind`` decoration of ``column`` by a 2x2 block with
    ``corner`` empty, the other kind in the opposite corner and ``kind`` in
    the remaining two."""
    if not 1 <= column <= grid.N or kind not in KINDS or \
            corner not in CORNERS:
        raise MoveNotApplicableError(
            f"no stabilization {column}:{kind}:{corner} on a {grid.N}-grid")
    row = grid.sigma(kind)[column - 1]
    ec, er = CORNERS[corner]
    empty_col, empty_row = column + ec, row + er
    other = _other(kind)
    marks = {}

    def row_image(r):
        return r if r < row else r + 1

    for (c, r), mark in grid.decorations().items():
        if c == column and r == row:
            continue
        new_c = c if c < column else c + 1
        new_r = row_image(r)
        if c == column:
            new_c = empty_col
        if r == row:
            new_r = empty_row
        marks[new_c, new_r] = mark
    for name, (dc, dr) in CORNERS.items():
        if (dc, dr) == (ec, er):
            continue
        mark = other if (dc, dr) == (1 - ec, 1 - er) else kind
        marks[column + dc, row + dr] = mark
    return _from_marks(grid.N + 1, marks)


def _from_marks(n: int, marks: Dict[Tuple[int, int], str]) -> GridDiagram:
    sigma = {'X': [0] * n, 'O': [0] * n}
    for (c, r), mark in marks.items():
        sigma[mark][c - 1] = r
    return _checked(GridDiagram(tuple(sigma['X']), tuple(sigma['O'])))


def destabilization_site(grid: GridDiagram, column: int,
                         row: int) -> Optional[Tuple[str, str]]:
    """(kind, empty corner) when the 2x2 block with lower-left square
    (column, row) holds exactly three decorations."""
    if not (1 <= column < grid.N and 1 <= row < grid.N):
        return None
    marks = grid.decorations()
    empty = [name for name, (dc, dr) in CORNERS.items()
             if (column + dc, row + dr) not in marks]
    if len(empty) != 1:
        return None
    ec, er = CORNERS[empty[0]]
    return marks[column + 1 - ec, row + er], empty[0]


def destabilize(grid: GridDiagram, column: int, row: int) -> GridDiagram:
    """Collapse the 2x2 block with lower-left square (column, row) to a
    single decoration."""
    site = destabilization_site(grid, column, row)
    if site is None:
        raise MoveNotApplicableError(
            f"no three-decoration block at ({column}, {row}) of a "
            f"{grid.N}-grid")
    kind, _ = site
    marks = {}
    for (c, r), mark in grid.decorations().items():
        if column <= c <= column + 1 and row <= r <= row + 1:
            continue
        new_c = c if c <= column else c - 1
        new_r = r if r <= row else r - 1
        marks[new_c, new_r] = mark
    marks[column, row] = kind
    return _from_marks(grid.N - 1, marks)


@dataclass(frozen=True)
class ElementaryMove:
    """A move on grids with its textual spec, e.g. ``commute:columns:2``,
    ``cyclic:rows:-1``, ``stabilize:3:X:NE``, ``destabilize:2:3``,
    ``identity``."""
    kind: str
    args: Tuple = ()

    def __str__(self):
        return ':'.join([self.kind] + [str(a) for a in self.args])

    def apply(self, grid: GridDiagram,
              allow_nested=False) -> GridDiagram:
        if self.kind == 'identity':
            return grid
        if self.kind == 'cyclic':
            return cyclic_permute(grid, *self.args)
        if self.kind == 'commute':
            return commute(grid, *self.args, allow_nested=allow_nested)
        if self.kind == 'stabilize':
            return stabilize(grid, *self.args)
        return destabilize(grid, *self.args)


def _axis(token: str) -> str:
    if token not in (ROWS, COLUMNS):
        raise MosaicParseError(f"axis must be rows or columns: {token!r}")
    return token


def parse_move(spec: str) -> ElementaryMove:
    parts = spec.strip().split(':')
    kind, args = parts[0], parts[1:]
    try:
        if kind == 'identity' and not args:
            return ElementaryMove(kind)
        if kind in ('cyclic', 'commute') and len(args) == 2:
            return ElementaryMove(kind, (_axis(args[0]), int(args[1])))
        if kind == 'stabilize' and len(args) == 3 and \
                args[1] in KINDS and args[2] in CORNERS:
            return ElementaryMove(kind, (int(args[0]), args[1], args[2]))
        if kind == 'destabilize' and len(args) == 2:
            return ElementaryMove(kind, (int(args[0]), int(args[1])))
    except ValueError:
        pass
    raise MosaicParseError(f"not a grid move: {spec!r}")


def inverse_move(grid: GridDiagram, move: ElementaryMove) -> ElementaryMove:
    """The move taking ``move.apply(grid)`` back to ``grid``."""
    if move.kind in ('identity', 'commute'):
        return move
    if move.kind == 'cyclic':
        axis, direction = move.args
        return ElementaryMove('cyclic', (axis, -direction))
    if move.kind == 'stabilize':
        column, kind, _ = move.args
        return ElementaryMove('destabilize',
                              (column, grid.sigma(kind)[column - 1]))
    column, row = move.args
    kind, corner = destabilization_site(grid, column, row)
    return ElementaryMove('stabilize', (column, kind, corner))


def neighbours(grid: GridDiagram, max_size: int,
               allow_nested=True) -> Iterator[Tuple[ElementaryMove,
                                                     GridDiagram]]:
    """Commutations and (de)stabilizations applicable to ``grid``."""
    n = grid.N
    for axis in (COLUMNS, ROWS):
        for index in range(1, n):
            if can_commute(grid, axis, index, allow_nested):
                yield (ElementaryMove('commute', (axis, index)),
                       commute(grid, axis, index, allow_nested))
    for column in range(1, n):
        for row in range(1, n):
            if destabilization_site(grid, column, row) is not None:
                yield (ElementaryMove('destabilize', (column, row)),
                       destabilize(grid, column, row))
    if n < max_size:
        for column in range(1, n + 1):
            for kind in KINDS:
                for corner in CORNERS:
                    yield (ElementaryMove('stabilize',
                                          (column, kind, corner)),
                           stabilize(grid, column, kind, corner))


# --- components and orientation ---------------------------------------------

def grid_components(grid: GridDiagram) -> List[List[int]]:
    """Columns of each component in travel order, starting from the column
    of the component's top-left decoration."""
    x_in_row = {r: c for c, r in enumerate(grid.sigma_x, start=1)}
    marks = grid.decorations()
    seen = set()
    components = []
    for row in range(grid.N, 0, -1):
        for column in range(1, grid.N + 1):
            if (column, row) not in marks or column in seen:
                continue
            cycle = []
            c = column
            while c not in seen:
                seen.add(c)
                cycle.append(c)
                c = x_in_row[grid.sigma_o[c - 1]]
            components.append(cycle)
    return components


def canonical_orientation(grid: GridDiagram) -> GridDiagram:
    """Reverse the components whose top-left decoration is an O, so that
    each starts with an X as ``mosaic_to_grid`` produces them."""
    sigma_x, sigma_o = list(grid.sigma_x), list(grid.sigma_o)
    marks = grid.decorations()
    for cycle in grid_components(grid):
        top = max(max(grid.sigma_x[c - 1], grid.sigma_o[c - 1])
                  for c in cycle)
        first = min(c for c in cycle
                    if top in (grid.sigma_x[c - 1], grid.sigma_o[c - 1]))
        if marks[first, top] == 'O':
            for c in cycle:
                sigma_x[c - 1], sigma_o[c - 1] = sigma_o[c - 1], \
                    sigma_x[c - 1]
    return GridDiagram(tuple(sigma_x), tuple(sigma_o))


# --- grids and mosaics -------------------------------------------------------

def grid_to_mosaic(grid: GridDiagram) -> KnotMosaic:
    """Draw the grid on an N-mosaic: decorations become corner tiles,
    segments become straight tiles and every crossing is a T10."""
    n = grid.N
    if n == 0:
        raise MoveNotApplicableError("an empty grid has no mosaic")
    x_col = {r: c for c, r in enumerate(grid.sigma_x, start=1)}
    o_col = {r: c for c, r in enumerate(grid.sigma_o, start=1)}
    edges = defaultdict(set)
    for column in range(1, n + 1):
        lo, hi = _interval(grid, column)
        for row in range(lo, hi + 1):
            if row < hi:
                edges[column, row].add(Edge.N)
            if row > lo:
                edges[column, row].add(Edge.S)
    for row in range(1, n + 1):
        left, right = sorted((x_col[row], o_col[row]))
        for column in range(left, right + 1):
            if column < right:
                edges[column, row].add(Edge.E)
            if column > left:
                edges[column, row].add(Edge.W)
    cells = [0] * (n * n)
    for (column, row), ends in edges.items():
        if len(ends) == 4:
            tile = Tile.T10
        elif ends == {Edge.N, Edge.S}:
            tile = Tile.T6
        elif ends == {Edge.E, Edge.W}:
            tile = Tile.T5
        else:
            tile = CORNER_ARCS[frozenset(ends)]
        cells[(n - row) * n + column - 1] = int(tile)
    return KnotMosaic(n, tuple(cells))


_CORNER_TILES = frozenset({Tile.T1, Tile.T2, Tile.T3, Tile.T4})


def mosaic_to_grid(mosaic: Mosaic) -> GridDiagram:
    """A grid diagram of the link drawn by a knot mosaic, read off its 5x
    zoom. Segments sharing a mosaic column (row) are spread over distinct
    grid columns (rows) in order of their top (left) end."""
    zoomed = zoom5(mosaic)
    tracing = trace_strands(zoomed)
    loops = []
    for strand in tracing.closed:
        corners = [(p.row, p.col) for p in strand.passes
                   if zoomed.cells[p.row * zoomed.n + p.col] in _CORNER_TILES]
        loops.append(corners)
    if not loops:
        return GridDiagram.empty()
    verticals, horizontals = {}, {}
    for corners in loops:
        for k in range(0, len(corners), 2):
            a, b = corners[k], corners[k + 1]
            verticals[a] = verticals[b] = (a[1], min(a[0], b[0]))
            c = corners[k - 1]
            horizontals[a] = horizontals[c] = (a[0], min(a[1], c[1]))
    columns = {seg: i for i, seg in
               enumerate(sorted(set(verticals.values())), start=1)}
    row_order = sorted(set(horizontals.values()))
    n = len(columns)
    rows = {seg: n - i for i, seg in enumerate(row_order)}
    sigma = {'X': [0] * n, 'O': [0] * n}
    for corners in loops:
        for k, corner in enumerate(corners):
            kind = 'X' if k % 2 == 0 else 'O'
            sigma[kind][columns[verticals[corner]] - 1] = \
                rows[horizontals[corner]]
    return GridDiagram(tuple(sigma['X']), tuple(sigma['O']))


def grid_fingerprint(grid: GridDiagram):
    return fingerprint(grid_to_mosaic(grid))


# --- moves as mosaic certificates -------------------------------------------

def _grid_path(source: GridDiagram, target: GridDiagram, max_depth: int,
               max_size: int) -> Optional[List[GridDiagram]]:
    """Grids from ``source`` to ``target`` (compared up to orientation)
    joined by single commutations and (de)stabilizations."""
    start, goal = canonical_orientation(source), canonical_orientation(target)
    if start == goal:
        return [source]
    parents = ({start: None}, {goal: None})
    frontiers = [[start], [goal]]
    depths = [0, 0]
    while depths[0] + depths[1] < max_depth and all(frontiers):
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        own, other = parents[side], parents[1 - side]
        layer = []
        for grid in frontiers[side]:
            for _, result in neighbours(grid, max_size):
                result = canonical_orientation(result)
                if result in own:
                    continue
                own[result] = grid
                layer.append(result)
                if result in other:
                    forward, backward = [], []
                    state = result
                    while state is not None:
                        forward.append(state)
                        state = parents[0][state]
                    state = parents[1][result]
                    while state is not None:
                        backward.append(state)
                        state = parents[1][state]
                    return forward[::-1] + backward
        depths[side] += 1
        frontiers[side] = layer
    return None


def elementary_move_as_certificate(grid: GridDiagram, move: ElementaryMove,
                                   max_depth: int = None,
                                   max_pad: int = None,
                                   catalog: MoveCatalog = None,
                                   grid_depth: int = 6) -> SearchResult:
    """Mosaic moves carrying the mosaic of ``grid`` to the mosaic of
    ``move.apply(grid)``. A cyclic permutation is first decomposed into
    commutations and (de)stabilizations, each certified separately."""
    target = move.apply(grid)
    if move.kind == 'identity' or grid_to_mosaic(grid) == \
            grid_to_mosaic(target):
        return SearchResult(Status.FOUND, MoveCertificate(0, 0), 0)
    if move.kind != 'cyclic':
        return find_certificate(grid_to_mosaic(grid), grid_to_mosaic(target),
                                max_depth=max_depth, max_pad=max_pad,
                                catalog=catalog)
    path = _grid_path(grid, target, grid_depth, grid.N + 2)
    if path is None:
        logger.info("no decomposition of %s within %d grid moves",
                    move, grid_depth)
        return SearchResult(Status.EXHAUSTED)
    cert = MoveCertificate(0, 0)
    explored = 0
    for before, after in zip(path, path[1:]):
        step = find_certificate(grid_to_mosaic(before), grid_to_mosaic(after),
                                max_depth=max_depth, max_pad=max_pad,
                                catalog=catalog)
        explored += step.explored
        if not step.found:
            return SearchResult(Status.EXHAUSTED, None, explored)
        cert = chain(cert, step.certificate)
    return SearchResult(Status.FOUND, cert, explored)
