"""Orbits of the ambient move group on the knot n-mosaics, the census file
and mosaic-number bounds.

Census file::

    n 3 classes 4
    0 1 canonical:0 0 0;0 0 0;0 0 0
    1 4 canonical:0 0 0;0 2 1;0 3 4
    ...
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from knotmosaic.config import get_settings
from knotmosaic.enumeration import enumerate_knot_mosaics
from knotmosaic.errors import (CapacityError, MosaicParseError,
                               NotSuitablyConnectedError, SideMismatchError)
from knotmosaic.invariants import Fingerprint, fingerprint
from knotmosaic.mosaic import Mosaic, format_inline, parse_inline
from knotmosaic.moves import MoveCatalog, generator_catalog
from knotmosaic.search import find_certificate

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over 0..size-1 with path compression and union by
    size."""

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.sizes = [1] * size
        self.num_components = size

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.sizes[ra] < self.sizes[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.sizes[ra] += self.sizes[rb]
        self.num_components -= 1
        return True

    def components(self) -> List[List[int]]:
        """Components as sorted index lists, ordered by their least index."""
        groups: Dict[int, List[int]] = {}
        for i in range(len(self.parents)):
            groups.setdefault(self.find(i), []).append(i)
        return sorted(groups.values(), key=lambda g: g[0])


@dataclass(frozen=True)
class OrbitClass:
    id: int
    size: int
    representative: Mosaic
    members: Tuple[Mosaic, ...] = ()


class OrbitPartition:
    """The classes of K^(n) under the move group, sorted by (size,
    representative encoding) and numbered from 0."""

    def __init__(self, n: int, classes: Sequence[OrbitClass]):
        self.n = n
        self.classes = tuple(classes)
        self._class_of: Dict[Mosaic, int] = {
            m: c.id for c in self.classes for m in c.members}
        self._fingerprints = None

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def total(self) -> int:
        return sum(c.size for c in self.classes)

    def class_id(self, mosaic: Mosaic) -> int:
        if mosaic.n != self.n:
            raise SideMismatchError(
                f"a {mosaic.n}-mosaic has no class among {self.n}-mosaics")
        try:
            return self._class_of[mosaic]
        except KeyError:
            raise NotSuitablyConnectedError(
                f"not a knot {self.n}-mosaic: {format_inline(mosaic)}")

    def class_of(self, mosaic: Mosaic) -> OrbitClass:
        return self.classes[self.class_id(mosaic)]

    def fingerprints(self) -> List[Fingerprint]:
        if self._fingerprints is None:
            self._fingerprints = [fingerprint(c.representative)
                                  for c in self.classes]
        return list(self._fingerprints)

    def census(self) -> 'Census':
        return Census(self.n, tuple(
            OrbitClass(c.id, c.size, c.representative) for c in self.classes))

    def to_json(self) -> dict:
        return self.census().to_json()


@dataclass(frozen=True)
class Census:
    n: int
    classes: Tuple[OrbitClass, ...]

    def __len__(self):
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            'n': self.n,
            'classes': [{'id': c.id, 'size': c.size,
                         'canonical': format_inline(c.representative)}
                        for c in self.classes],
        }


def format_census(census) -> str:
    lines = [f"n {census.n} classes {len(census.classes)}"]
    for c in census.classes:
        lines.append(
            f"{c.id} {c.size} canonical:{format_inline(c.representative)}")
    return '\n'.join(lines) + '\n'


def parse_census(text: str) -> Census:
    lines = [line for line in text.split('\n') if line.strip()]
    if not lines:
        raise MosaicParseError("empty census", 1)
    header = lines[0].split()
    if len(header) != 4 or header[0] != 'n' or header[2] != 'classes':
        raise MosaicParseError(f"bad census header {lines[0]!r}", 1)
    n, count = int(header[1]), int(header[3])
    classes = []
    for lineno, line in enumerate(lines[1:], start=2):
        head, sep, body = line.partition('canonical:')
        fields = head.split()
        if not sep or len(fields) != 2:
            raise MosaicParseError(f"bad census line {line!r}", lineno)
        representative = parse_inline(body)
        if representative.n != n:
            raise MosaicParseError(
                f"canonical mosaic has side {representative.n}, not {n}",
                lineno)
        classes.append(OrbitClass(int(fields[0]), int(fields[1]),
                                  representative))
    if len(classes) != count:
        raise MosaicParseError(
            f"header announces {count} classes, found {len(classes)}", 1)
    return Census(n, tuple(classes))


def write_census(partition, fpath):
    with open(fpath, 'w', encoding='utf8') as fh:
        fh.write(format_census(partition))


def load_census(fpath) -> Census:
    with open(fpath, encoding='utf8') as fh:
        return parse_census(fh.read())


def _build_orbits(n: int, catalog: MoveCatalog, progress: bool,
                  max_states: int, jobs: int) -> OrbitPartition:
    mosaics = []
    for mosaic in enumerate_knot_mosaics(n, jobs=jobs, progress=progress):
        mosaics.append(mosaic)
        if len(mosaics) > max_states:
            raise CapacityError(
                f"K({n}) has more than {max_states} members")
    index = {m: k for k, m in enumerate(mosaics)}
    forest = UnionFind(len(mosaics))
    stream = tqdm(mosaics, desc=f"A({n})") if progress else mosaics
    for k, mosaic in enumerate(stream):
        for _, result in catalog.successors(mosaic):
            forest.union(k, index[result])
    # members come out in enumeration order, which is encoding order, so
    # each group's first member is its canonical representative
    groups = sorted(forest.components(),
                    key=lambda g: (len(g), mosaics[g[0]].encode()))
    classes = tuple(
        OrbitClass(cid, len(g), mosaics[g[0]], tuple(mosaics[k] for k in g))
        for cid, g in enumerate(groups))
    logger.info("K(%d): %d mosaics in %d classes", n, len(mosaics),
                len(classes))
    return OrbitPartition(n, classes)


@lru_cache(maxsize=None)
def _default_orbits(n: int) -> OrbitPartition:
    settings = get_settings()
    return _build_orbits(n, generator_catalog(), False, settings.max_states,
                         settings.jobs)


def compute_orbits(n: int, catalog: MoveCatalog = None, progress=False,
                   max_states: int = None, jobs: int = None) -> OrbitPartition:
    """Partition K^(n) into classes of the move group. Results for the
    default catalog are cached per process."""
    settings = get_settings()
    if catalog is generator_catalog():
        catalog = None
    if catalog is None and not progress and max_states is None \
            and jobs is None:
        return _default_orbits(n)
    return _build_orbits(
        n, generator_catalog() if catalog is None else catalog, progress,
        settings.max_states if max_states is None else max_states,
        settings.jobs if jobs is None else jobs)


class Verdict(Enum):
    SAME = 'same'
    DISTINCT = 'distinct'
    UNKNOWN = 'unknown'


def same_type_n(first: Mosaic, second: Mosaic, catalog: MoveCatalog = None,
                orbit_limit: int = None, max_depth: int = None) -> Verdict:
    """Whether two knot n-mosaics are related by moves inside n-mosaics.
    Decided by the orbit partition up to ``orbit_limit``, by bounded search
    beyond it (UNKNOWN when the search gives up)."""
    if first.n != second.n:
        raise SideMismatchError(
            f"cannot compare a {first.n}-mosaic with a {second.n}-mosaic")
    orbit_limit = get_settings().orbit_limit if orbit_limit is None \
        else orbit_limit
    if first == second:
        return Verdict.SAME
    if first.n <= orbit_limit:
        partition = compute_orbits(first.n, catalog)
        same = partition.class_id(first) == partition.class_id(second)
        return Verdict.SAME if same else Verdict.DISTINCT
    try:
        if fingerprint(first) != fingerprint(second):
            return Verdict.DISTINCT
    except CapacityError:
        logger.info("too many crossings for a fingerprint, searching")
    result = find_certificate(first, second, max_depth=max_depth, max_pad=0,
                              catalog=catalog, orbit_limit=0)
    return Verdict.SAME if result.found else Verdict.UNKNOWN


@dataclass(frozen=True)
class MosaicNumberBounds:
    lower: int
    upper: Optional[int]

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def to_json(self) -> dict:
        return {'lower': self.lower, 'upper': self.upper}


def mosaic_number_bounds(target: Fingerprint,
                         partitions: Iterable[OrbitPartition],
                         witnesses: Iterable[Mosaic] = ()
                         ) -> MosaicNumberBounds:
    """Bounds on the least n at which a knot with fingerprint ``target``
    appears. ``partitions`` must cover n = 1, 2, ... without gaps; the lower
    bound is the first of them with a matching class, or one past the last.
    Witnesses and matching classes both bound from above."""
    partitions = sorted(partitions, key=lambda p: p.n)
    matching = [p.n for p in partitions if target in p.fingerprints()]
    if matching:
        lower = matching[0]
    else:
        lower = partitions[-1].n + 1 if partitions else 1
    sides = matching + [w.n for w in witnesses if fingerprint(w) == target]
    return MosaicNumberBounds(lower, min(sides) if sides else None)
