"""Reading a mosaic as a link diagram: strand tracing, PD codes, the Kauffman
bracket and the fingerprint used to tell link types apart.

Conventions
-----------
* PD crossings list their four arcs counter-clockwise starting at an under
  port: the N port of a T9 (horizontal strand over) and the E port of a T10
  (vertical strand over). Arcs are numbered by first appearance, scanning
  crossings in row-major order.
* Bracket: ``<X(a,b,c,d)> = A <(a,b)(c,d)> + A^-1 <(a,d)(b,c)>`` and every
  loop contributes ``d = -A^2 - A^-2``; a diagram with L loops in a state
  contributes ``d^(L-1)`` so that the unknot has bracket 1.
* Writhe: a crossing is positive when the over strand's direction turns
  counter-clockwise onto the under strand's direction.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

import sympy

from knotmosaic.config import get_settings
from knotmosaic.errors import CapacityError
from knotmosaic.mosaic import Mosaic
from knotmosaic.tiles import CROSSING_TILES, PARTNER, Edge, Tile

logger = logging.getLogger(__name__)


class LaurentPolynomial:
    """Integer Laurent polynomial in A, stored as sorted (exponent, coeff)
    pairs without zero coefficients."""
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        if isinstance(terms, LaurentPolynomial):
            self._terms = terms._terms
            return
        merged: Dict[int, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for exp, coeff in items:
            merged[int(exp)] += int(coeff)
        self._terms = tuple(sorted((e, c) for e, c in merged.items() if c))

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0):
        return cls({exp: coeff})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exp: int) -> int:
        return dict(self._terms).get(exp, 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __lt__(self, other):
        return self._terms < other._terms

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        return LaurentPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial((e, c * other) for e, c in self._terms)
        return LaurentPolynomial(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._terms for e2, c2 in other._terms)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPolynomial.monomial(1)
        for _ in range(power):
            result = result * self
        return result

    def shift(self, k: int) -> 'LaurentPolynomial':
        """Multiply by A^k."""
        return LaurentPolynomial((e + k, c) for e, c in self._terms)

    def invert(self) -> 'LaurentPolynomial':
        """Substitute A -> A^-1."""
        return LaurentPolynomial((-e, c) for e, c in self._terms)

    def to_sympy(self, symbol=None):
        symbol = symbol or sympy.Symbol('A')
        return sympy.Add(*[c * symbol ** e for e, c in self._terms])

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(f"{c}*A^{e}" for e, c in self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({dict(self._terms)!r})"


ONE = LaurentPolynomial.monomial(1)
LOOP = LaurentPolynomial({2: -1, -2: -1})


@lru_cache(maxsize=None)
def _loop_power(k: int) -> LaurentPolynomial:
    return ONE if k == 0 else _loop_power(k - 1) * LOOP


# --- tracing -----------------------------------------------------------------

@dataclass(frozen=True)
class Pass:
    """A strand crossing one cell, entering and leaving through edges."""
    row: int
    col: int
    enter: Edge
    leave: Edge


@dataclass(frozen=True)
class Strand:
    passes: Tuple[Pass, ...]
    closed: bool


@dataclass(frozen=True)
class Tracing:
    n: int
    cells: Tuple[int, ...]
    strands: Tuple[Strand, ...]

    @property
    def closed(self) -> List[Strand]:
        return [s for s in self.strands if s.closed]

    @property
    def open(self) -> List[Strand]:
        return [s for s in self.strands if not s.closed]

    def is_crossing(self, p: Pass) -> bool:
        return self.cells[p.row * self.n + p.col] in CROSSING_TILES

    def passes_over(self, p: Pass) -> bool:
        """Whether a pass through a crossing cell is on the over strand."""
        tile = self.cells[p.row * self.n + p.col]
        horizontal = p.enter in (Edge.E, Edge.W)
        return horizontal == (tile == Tile.T9)


def _walk(n, cells, i, j, enter, visited):
    passes = []
    start = (i, j, enter)
    while True:
        tile = cells[i * n + j]
        leave = Edge(PARTNER[tile][enter])
        visited.add((i, j, enter))
        visited.add((i, j, leave))
        passes.append(Pass(i, j, enter, leave))
        di, dj = leave.step
        i, j = i + di, j + dj
        if not (0 <= i < n and 0 <= j < n):
            return passes, False
        enter = leave.opposite
        if (i, j, enter) == start:
            return passes, True
        if PARTNER[cells[i * n + j]][enter] is None:
            # dangling: the neighbour has no matching connection point
            return passes, False


def trace_strands(mosaic: Mosaic) -> Tracing:
    """Follow every strand of a mosaic. Strands starting on the outer
    boundary come first (in boundary order), then closed loops in row-major
    order of their first cell."""
    n, cells = mosaic.n, mosaic.cells
    visited = set()
    strands = []
    starts = ([(0, j, Edge.N) for j in range(n)]
              + [(i, n - 1, Edge.E) for i in range(n)]
              + [(n - 1, j, Edge.S) for j in range(n)]
              + [(i, 0, Edge.W) for i in range(n)])
    for i, j, edge in starts:
        if PARTNER[cells[i * n + j]][edge] is None or \
                (i, j, edge) in visited:
            continue
        passes, _ = _walk(n, cells, i, j, edge, visited)
        strands.append(Strand(tuple(passes), False))
    for i in range(n):
        for j in range(n):
            for edge in Edge:
                if PARTNER[cells[i * n + j]][edge] is None or \
                        (i, j, edge) in visited:
                    continue
                passes, closed = _walk(n, cells, i, j, edge, visited)
                strands.append(Strand(tuple(passes), closed))
    return Tracing(n, cells, tuple(strands))


# --- PD codes ----------------------------------------------------------------

_SLOTS = {
    Tile.T9: (Edge.N, Edge.W, Edge.S, Edge.E),
    Tile.T10: (Edge.E, Edge.N, Edge.W, Edge.S),
}


@dataclass(frozen=True)
class PDCrossing:
    arcs: Tuple[int, int, int, int]
    cell: Tuple[int, int] = field(compare=False)
    tile: int = field(compare=False)

    def __str__(self):
        a, b, c, d = self.arcs
        return f"X({a},{b},{c},{d}) over={b},{d}"


@dataclass(frozen=True)
class PDCode:
    crossings: Tuple[PDCrossing, ...]
    free_loops: int
    components: int

    @property
    def arcs(self) -> List[int]:
        return sorted({a for x in self.crossings for a in x.arcs})

    def __str__(self):
        lines = [str(x) for x in self.crossings]
        lines.append(f"free loops: {self.free_loops}")
        lines.append(f"components: {self.components}")
        return '\n'.join(lines) + '\n'


def _follow_arc(n, cells, i, j, leave):
    """From a crossing port, walk through non-crossing cells to the next
    crossing port; None when the arc runs off the boundary."""
    while True:
        di, dj = leave.step
        i, j = i + di, j + dj
        if not (0 <= i < n and 0 <= j < n):
            return None
        enter = leave.opposite
        tile = cells[i * n + j]
        if tile in CROSSING_TILES:
            return i, j, enter
        partner = PARTNER[tile][enter]
        if partner is None:
            return None
        leave = Edge(partner)


def forgetful(mosaic: Mosaic) -> PDCode:
    """The link diagram drawn by a mosaic, as a PD code plus its number of
    components and of crossing-free loops."""
    n, cells = mosaic.n, mosaic.cells
    tracing = trace_strands(mosaic)
    free_loops = sum(1 for s in tracing.closed
                     if not any(tracing.is_crossing(p) for p in s.passes))
    positions = [(i, j) for i in range(n) for j in range(n)
                 if cells[i * n + j] in CROSSING_TILES]
    labels: Dict[Tuple[int, int, Edge], int] = {}
    next_label = 1
    for i, j in positions:
        for edge in _SLOTS[cells[i * n + j]]:
            if (i, j, edge) in labels:
                continue
            labels[i, j, edge] = next_label
            end = _follow_arc(n, cells, i, j, edge)
            if end is not None:
                labels[end] = next_label
            next_label += 1
    crossings = tuple(
        PDCrossing(tuple(labels[i, j, e] for e in _SLOTS[cells[i * n + j]]),
                   (i, j), cells[i * n + j])
        for i, j in positions)
    return PDCode(crossings, free_loops, len(tracing.strands))


# --- bracket -----------------------------------------------------------------

def _check_cap(count: int, cap: Optional[int]):
    cap = get_settings().crossing_cap if cap is None else cap
    if count > cap:
        raise CapacityError(
            f"{count} crossings exceed the configured cap of {cap}")


def _smoothings(crossing: PDCrossing):
    a, b, c, d = crossing.arcs
    return ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c))))


def _join(ends: Dict[int, int], x: int, y: int) -> int:
    """Join arc ends x and y in a partial state where ``ends`` maps each
    path end to the path's other end. Returns the number of loops closed."""
    if x == y:
        return 1
    ex = ends.pop(x, x)
    ey = ends.pop(y, y)
    if ex == y:
        return 1
    ends[ex] = ey
    ends[ey] = ex
    return 0


def _order(crossings: Tuple[PDCrossing, ...]) -> List[PDCrossing]:
    """Greedy contraction order: next the crossing sharing most arcs with
    those already absorbed."""
    remaining = list(crossings)
    seen = set()
    ordered = []
    while remaining:
        best = max(remaining, key=lambda x: sum(a in seen for a in x.arcs))
        remaining.remove(best)
        ordered.append(best)
        seen.update(best.arcs)
    return ordered


def kauffman_bracket(pd: PDCode, cap: int = None) -> LaurentPolynomial:
    """Bracket of the diagram, contracting one crossing at a time."""
    _check_cap(len(pd.crossings), cap)
    states = {(): {(0, 0): 1}}
    for crossing in _order(pd.crossings):
        merged: Dict[tuple, Dict[Tuple[int, int], int]] = defaultdict(
            lambda: defaultdict(int))
        for key, weights in states.items():
            for sign, pairs in _smoothings(crossing):
                ends = {}
                for p, q in key:
                    ends[p], ends[q] = q, p
                closed = sum(_join(ends, x, y) for x, y in pairs)
                new_key = tuple(sorted((p, q) for p, q in ends.items()
                                       if p < q))
                target = merged[new_key]
                for (exp, loops), coeff in weights.items():
                    target[exp + sign, loops + closed] += coeff
        states = merged
    logger.debug("contracted %d crossings", len(pd.crossings))
    return _collect(states.get((), {}), pd.free_loops)


def _collect(weights, free_loops: int) -> LaurentPolynomial:
    total = LaurentPolynomial()
    for (exp, loops), coeff in weights.items():
        loops += free_loops
        if loops == 0:
            total = total + LaurentPolynomial.monomial(coeff, exp)
        else:
            total = total + _loop_power(loops - 1).shift(exp) * coeff
    return total


def state_sum_bracket(pd: PDCode, cap: int = None) -> LaurentPolynomial:
    """The same bracket as a plain sum over all 2^c states."""
    _check_cap(len(pd.crossings), cap)
    weights: Dict[Tuple[int, int], int] = defaultdict(int)
    for choice in product((0, 1), repeat=len(pd.crossings)):
        ends: Dict[int, int] = {}
        loops = 0
        exp = 0
        for crossing, pick in zip(pd.crossings, choice):
            sign, pairs = _smoothings(crossing)[pick]
            exp += sign
            loops += sum(_join(ends, x, y) for x, y in pairs)
        weights[exp, loops] += 1
    return _collect(weights, pd.free_loops)


# --- fingerprint -------------------------------------------------------------

def _cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def oriented_crossings(mosaic: Mosaic) -> List[Tuple[int, int, int]]:
    """(sign, over component, under component) for every crossing, with each
    closed strand oriented in its traced direction."""
    tracing = trace_strands(mosaic)
    seen: Dict[Tuple[int, int], Dict[bool, Tuple[int, tuple]]] = \
        defaultdict(dict)
    for index, strand in enumerate(tracing.strands):
        for p in strand.passes:
            if tracing.is_crossing(p):
                seen[p.row, p.col][tracing.passes_over(p)] = (
                    index, p.leave.vector)
    result = []
    for cell in sorted(seen):
        over_comp, over_dir = seen[cell][True]
        under_comp, under_dir = seen[cell][False]
        sign = 1 if _cross(over_dir, under_dir) > 0 else -1
        result.append((sign, over_comp, under_comp))
    return result


def writhe(mosaic: Mosaic) -> int:
    return sum(sign for sign, _, _ in oriented_crossings(mosaic))


@dataclass(frozen=True, order=True)
class Fingerprint:
    component_count: int
    bracket: LaurentPolynomial

    def __str__(self):
        return f"components: {self.component_count}\nbracket: {self.bracket}"


def normalized_bracket(raw: LaurentPolynomial, w: int) -> LaurentPolynomial:
    """(-A^3)^(-w) times the bracket."""
    factor = -1 if w % 2 else 1
    return raw.shift(-3 * w) * factor


def fingerprint(mosaic: Mosaic, cap: int = None) -> Fingerprint:
    """Component count and writhe-normalised bracket, minimised over the
    relative orientations of the components so that it does not depend on
    how the link is oriented."""
    pd = forgetful(mosaic)
    raw = kauffman_bracket(pd, cap)
    crossings = oriented_crossings(mosaic)
    linked = sorted({c for _, o, u in crossings for c in (o, u)})
    flippable = linked[1:]
    best = None
    for flips in product((False, True), repeat=len(flippable)):
        flipped = {c for c, f in zip(flippable, flips) if f}
        w = sum(sign if (o in flipped) == (u in flipped) else -sign
                for sign, o, u in crossings)
        candidate = normalized_bracket(raw, w)
        if best is None or candidate < best:
            best = candidate
    return Fingerprint(pd.components, best if best is not None else raw)


def crossing_count(mosaic: Mosaic) -> int:
    return mosaic.count(*CROSSING_TILES)


def jones_polynomial(value):
    """Jones polynomial in t from a fingerprint or normalised bracket, using
    A = t^(-1/4)."""
    bracket = value.bracket if isinstance(value, Fingerprint) else value
    t = sympy.Symbol('t')
    return sympy.expand(
        bracket.to_sympy().subs(sympy.Symbol('A'), t ** sympy.Rational(-1, 4)))


def fingerprints(mosaics: Iterable[Mosaic]) -> List[Fingerprint]:
    return [fingerprint(m) for m in mosaics]
