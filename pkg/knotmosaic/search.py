"""Move certificates and the bounded search that finds them.

A certificate from M to N pads M with ``pad_source`` blank rows and columns,
N with ``pad_target``, and lists the moves that carry the first padded mosaic
into the second.

Certificate text::

    1 1
    P6@(0,1)
    P6.r2+ne@(1,0)
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from knotmosaic.config import get_settings
from knotmosaic.errors import (BoundsError, CapacityError,
                               CertificateCorruptError, MosaicParseError)
from knotmosaic.invariants import fingerprint
from knotmosaic.mosaic import (Mosaic, boundary_profile, check_connectivity,
                               inject, is_suitably_connected)
from knotmosaic.moves import (MoveApplication, MoveCatalog, apply_move,
                              generator_catalog)

logger = logging.getLogger(__name__)


class Status(Enum):
    FOUND = 'found'
    EXHAUSTED = 'exhausted'
    DISTINCT = 'distinct'


@dataclass(frozen=True)
class MoveCertificate:
    pad_source: int
    pad_target: int
    steps: Tuple[MoveApplication, ...] = ()

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return serialize_certificate(self)

    def lifted(self, k: int) -> 'MoveCertificate':
        """The same moves on k more paddings of both ends; moves stay at
        their positions because padding grows the mosaic right and down."""
        return MoveCertificate(self.pad_source + k, self.pad_target + k,
                               self.steps)

    def reversed(self) -> 'MoveCertificate':
        return MoveCertificate(self.pad_target, self.pad_source,
                               tuple(reversed(self.steps)))


def chain(first: MoveCertificate,
          second: MoveCertificate) -> MoveCertificate:
    """M -> N followed by N -> P, lifted to a common size."""
    a = first.lifted(max(0, second.pad_source - first.pad_target))
    b = second.lifted(max(0, first.pad_target - second.pad_source))
    return MoveCertificate(a.pad_source, b.pad_target, a.steps + b.steps)


def serialize_certificate(cert: MoveCertificate) -> str:
    lines = [f"{cert.pad_source} {cert.pad_target}"]
    lines.extend(str(step) for step in cert.steps)
    return '\n'.join(lines) + '\n'


def _parse_step(line: str, lineno: int, catalog: MoveCatalog):
    label, _, where = line.partition('@')
    try:
        i, j = (int(x) for x in where.strip().strip('()').split(','))
    except ValueError:
        raise MosaicParseError(f"expected 'label@(i,j)', got {line!r}",
                               lineno)
    pattern = catalog.pattern(label.strip())
    if pattern is None:
        raise CertificateCorruptError(
            f"line {lineno}: unknown move {label.strip()!r}")
    return MoveApplication(pattern, i, j)


def parse_certificate(text: str,
                      catalog: MoveCatalog = None) -> MoveCertificate:
    if catalog is None:
        catalog = generator_catalog()
    lines = [line.strip() for line in text.split('\n')]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise MosaicParseError("empty certificate", 1)
    try:
        pad_source, pad_target = (int(x) for x in lines[0].split())
    except ValueError:
        raise MosaicParseError(
            f"expected 'pad_source pad_target', got {lines[0]!r}", 1)
    steps = tuple(_parse_step(line, lineno, catalog)
                  for lineno, line in enumerate(lines[1:], start=2) if line)
    return MoveCertificate(pad_source, pad_target, steps)


def read_certificate(path, catalog: MoveCatalog = None) -> MoveCertificate:
    with open(path, encoding='utf8') as fh:
        return parse_certificate(fh.read(), catalog)


def replay(cert: MoveCertificate, mosaic: Mosaic) -> Mosaic:
    """Apply the certificate to ``mosaic``. Every step must change the
    mosaic and keep it connected the way the padded source is."""
    current = inject(mosaic, cert.pad_source)
    open_boundary = not is_suitably_connected(current)
    for number, step in enumerate(cert.steps, start=1):
        try:
            result = apply_move(current, step)
        except BoundsError as e:
            raise CertificateCorruptError(f"step {number}: {e}")
        if result == current:
            raise CertificateCorruptError(
                f"step {number}: {step} does not apply")
        report = check_connectivity(result, open_boundary=open_boundary)
        if not report:
            raise CertificateCorruptError(
                f"step {number}: {step} breaks connectivity at "
                f"{report.violation}")
        current = result
    return current


def verify(cert: MoveCertificate, source: Mosaic, target: Mosaic) -> bool:
    try:
        return replay(cert, source) == inject(target, cert.pad_target)
    except CertificateCorruptError:
        return False


@dataclass(frozen=True)
class SearchResult:
    status: Status
    certificate: Optional[MoveCertificate] = None
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def __bool__(self):
        return self.found


def _path(parents, state) -> List[MoveApplication]:
    """Moves from the root of ``parents`` to ``state``."""
    steps = []
    while parents[state] is not None:
        state, app = parents[state]
        steps.append(app)
    steps.reverse()
    return steps


def shortest_moves(source: Mosaic, target: Mosaic, catalog: MoveCatalog,
                   max_depth: int, max_states: int):
    """Bidirectional breadth-first search. Returns (steps or None, number of
    states visited)."""
    if source == target:
        return [], 1
    parents: Tuple[Dict, Dict] = ({source: None}, {target: None})
    depth_of: Tuple[Dict, Dict] = ({source: 0}, {target: 0})
    frontiers = [[source], [target]]
    depths = [0, 0]
    while depths[0] + depths[1] < max_depth and all(frontiers):
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        own, other = parents[side], parents[1 - side]
        layer = []
        meetings = []
        for state in sorted(frontiers[side]):
            for app, result in catalog.successors(state):
                if result in own:
                    continue
                own[result] = (state, app)
                depth_of[side][result] = depths[side] + 1
                layer.append(result)
                if result in other:
                    meetings.append(result)
        depths[side] += 1
        frontiers[side] = layer
        visited = len(parents[0]) + len(parents[1])
        logger.debug("search layer %d/%d: %d new states, %d visited",
                     depths[0], depths[1], len(layer), visited)
        if meetings:
            meet = min(meetings, key=lambda m: (
                depth_of[1 - side][m], m.encode()))
            forward = _path(parents[0], meet)
            backward = _path(parents[1], meet)
            return forward + backward[::-1], visited
        if visited > max_states:
            raise CapacityError(
                f"search visited {visited} states, cap is {max_states}")
    return None, len(parents[0]) + len(parents[1])


def pad_schedule(m: int, n: int, max_pad: int) -> List[Tuple[int, int]]:
    """Paddings that bring an m- and an n-mosaic to a common size, least
    first."""
    if m <= n:
        return [(pad + n - m, pad) for pad in range(max_pad + 1)]
    return [(pad, pad + m - n) for pad in range(max_pad + 1)]


def _orbits_differ(source: Mosaic, target: Mosaic, catalog, limit) -> bool:
    if source.n > limit:
        return False
    from knotmosaic.orbits import compute_orbits
    partition = compute_orbits(source.n, catalog)
    return partition.class_id(source) != partition.class_id(target)


def _fingerprints_differ(source: Mosaic, target: Mosaic) -> bool:
    try:
        return fingerprint(source) != fingerprint(target)
    except CapacityError:
        logger.info("too many crossings for a fingerprint, searching")
        return False


def find_certificate(source: Mosaic, target: Mosaic, max_depth: int = None,
                     max_pad: int = None, catalog: MoveCatalog = None,
                     max_states: int = None,
                     orbit_limit: int = None) -> SearchResult:
    """Search a certificate from ``source`` to ``target``.

    Closed mosaics are tried at each padding of ``pad_schedule``; sizes up to
    ``orbit_limit`` are first looked up in the orbit partition so that a
    size at which the two mosaics are in different classes is skipped. The
    result is DISTINCT only when their fingerprints differ; a budget in
    which every size was skipped is EXHAUSTED, since a larger padding may
    still join them.
    Open (tangle) mosaics are searched at their own size only.
    """
    settings = get_settings()
    max_depth = settings.search_depth if max_depth is None else max_depth
    max_pad = settings.search_pad if max_pad is None else max_pad
    max_states = settings.max_states if max_states is None else max_states
    orbit_limit = settings.orbit_limit if orbit_limit is None \
        else orbit_limit
    if catalog is None:
        catalog = generator_catalog()
    closed = bool(is_suitably_connected(source))
    if closed != bool(is_suitably_connected(target)):
        return SearchResult(Status.DISTINCT)
    if closed:
        if _fingerprints_differ(source, target):
            return SearchResult(Status.DISTINCT)
        schedule = pad_schedule(source.n, target.n, max_pad)
    elif source.n != target.n or \
            boundary_profile(source) != boundary_profile(target):
        return SearchResult(Status.DISTINCT)
    else:
        schedule = [(0, 0)]
        orbit_limit = 0
    explored = 0
    for pad_source, pad_target in schedule:
        a, b = inject(source, pad_source), inject(target, pad_target)
        if _orbits_differ(a, b, catalog, orbit_limit):
            logger.info("size %d: different classes, skipped", a.n)
            continue
        steps, visited = shortest_moves(a, b, catalog, max_depth, max_states)
        explored += visited
        if steps is not None:
            cert = MoveCertificate(pad_source, pad_target, tuple(steps))
            if not verify(cert, source, target):
                raise CertificateCorruptError(
                    "search produced a certificate that does not replay")
            logger.info("certificate of %d moves at size %d", len(cert), a.n)
            return SearchResult(Status.FOUND, cert, explored)
    return SearchResult(Status.EXHAUSTED, None, explored)
