"""The eleven mosaic tiles, their connection profiles and the dihedral action.

Edges are named by compass direction and numbered clockwise from north. A
tile's connection profile lists the edge midpoints where a drawn curve ends,
how those endpoints pair into strands, and, for the two crossing tiles, which
strand passes over.
"""
from dataclasses import dataclass
from enum import IntEnum
from typing import FrozenSet, Optional, Tuple


class Edge(IntEnum):
    N = 0
    E = 1
    S = 2
    W = 3

    @property
    def opposite(self) -> 'Edge':
        return Edge((self + 2) % 4)

    @property
    def bit(self) -> int:
        return 1 << int(self)

    @property
    def step(self) -> Tuple[int, int]:
        """(row, column) offset of the neighbouring cell across this edge."""
        return _STEPS[self]

    @property
    def vector(self) -> Tuple[int, int]:
        """Outward direction in the plane, x to the east and y to the north."""
        return _VECTORS[self]


_STEPS = {Edge.N: (-1, 0), Edge.E: (0, 1), Edge.S: (1, 0), Edge.W: (0, -1)}
_VECTORS = {Edge.N: (0, 1), Edge.E: (1, 0), Edge.S: (0, -1), Edge.W: (-1, 0)}


class Tile(IntEnum):
    T0 = 0
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7
    T8 = 8
    T9 = 9
    T10 = 10


Strand = FrozenSet[Edge]


@dataclass(frozen=True)
class ConnectionProfile:
    endpoints: FrozenSet[Edge]
    pairing: FrozenSet[Strand]
    over_strand: Optional[Strand] = None

    @property
    def mask(self) -> int:
        return sum(e.bit for e in self.endpoints)

    def partner(self, edge: Edge) -> Edge:
        for strand in self.pairing:
            if edge in strand:
                (other,) = strand - {edge}
                return other
        raise KeyError(edge)


def _profile(*strands, over=None):
    pairing = frozenset(frozenset(s) for s in strands)
    endpoints = frozenset(e for s in pairing for e in s)
    return ConnectionProfile(endpoints, pairing,
                             frozenset(over) if over else None)


N, E, S, W = Edge.N, Edge.E, Edge.S, Edge.W

_PROFILES = {
    Tile.T0: _profile(),
    Tile.T1: _profile((S, W)),
    Tile.T2: _profile((S, E)),
    Tile.T3: _profile((N, E)),
    Tile.T4: _profile((N, W)),
    Tile.T5: _profile((E, W)),
    Tile.T6: _profile((N, S)),
    Tile.T7: _profile((N, E), (S, W)),
    Tile.T8: _profile((N, W), (S, E)),
    Tile.T9: _profile((N, S), (E, W), over=(E, W)),
    Tile.T10: _profile((N, S), (E, W), over=(N, S)),
}

_BY_PROFILE = {profile: tile for tile, profile in _PROFILES.items()}

CROSSING_TILES = frozenset({Tile.T9, Tile.T10})

# the arc hugging a corner, keyed by the two edges meeting there
CORNER_ARCS = {
    frozenset({N, W}): Tile.T4,
    frozenset({N, E}): Tile.T3,
    frozenset({S, E}): Tile.T2,
    frozenset({S, W}): Tile.T1,
}


def connection_profile(tile) -> ConnectionProfile:
    return _PROFILES[Tile(tile)]


@dataclass(frozen=True)
class D4Element:
    """Reflect across the vertical axis when ``reflected``, then rotate
    clockwise by ``rotation`` quarter turns."""
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        if self.rotation not in range(4):
            raise ValueError(f"rotation must be in 0..3: {self.rotation}")

    def __mul__(self, other: 'D4Element') -> 'D4Element':
        """``self * other`` applies ``other`` first."""
        sign = -1 if self.reflected else 1
        return D4Element((self.rotation + sign * other.rotation) % 4,
                         self.reflected != other.reflected)

    def inverse(self) -> 'D4Element':
        if self.reflected:
            return self
        return D4Element((-self.rotation) % 4, False)

    @property
    def name(self) -> str:
        if self == IDENTITY:
            return 'id'
        return (f"r{self.rotation}" if self.rotation else '') + \
            ('f' if self.reflected else '')

    def edge(self, edge: Edge) -> Edge:
        value = -int(edge) if self.reflected else int(edge)
        return Edge((value + self.rotation) % 4)

    def position(self, row: int, col: int, k: int) -> Tuple[int, int]:
        """Image of cell (row, col) of a k-by-k block."""
        if self.reflected:
            col = k - 1 - col
        for _ in range(self.rotation):
            row, col = col, k - 1 - row
        return row, col

    def apply(self, profile: ConnectionProfile) -> ConnectionProfile:
        def image(edges):
            return frozenset(self.edge(e) for e in edges)
        return ConnectionProfile(
            image(profile.endpoints),
            frozenset(image(s) for s in profile.pairing),
            image(profile.over_strand) if profile.over_strand else None)


IDENTITY = D4Element()
D4 = (IDENTITY,) + tuple(D4Element(r, f) for f in (False, True)
                          for r in range(4) if r or f)
D4_BY_NAME = {g.name: g for g in D4}

_TRANSFORM = {
    g: tuple(_BY_PROFILE[g.apply(_PROFILES[t])] for t in Tile) for g in D4}


def transform_tile(tile, g: D4Element) -> Tile:
    return _TRANSFORM[g][tile]


def tile_union(a, b) -> Optional[Tile]:
    """Superpose two crossing-free tiles with disjoint endpoints, if the
    result is itself a tile."""
    pa, pb = connection_profile(a), connection_profile(b)
    if pa.over_strand or pb.over_strand or pa.endpoints & pb.endpoints:
        return None
    return _BY_PROFILE.get(
        ConnectionProfile(pa.endpoints | pb.endpoints,
                          pa.pairing | pb.pairing))


# flat lookup tables for the hot loops of enumeration and tracing
EDGE_MASK = tuple(_PROFILES[t].mask for t in Tile)
PARTNER = tuple(
    tuple(_PROFILES[t].partner(e) if e in _PROFILES[t].endpoints else None
          for e in Edge)
    for t in Tile)
