"""Console script for knotmosaic."""
import functools
import json
import logging
import sys

import click

from knotmosaic.config import get_settings
from knotmosaic.enumeration import enumerate_knot_mosaics, knot_mosaic_count
from knotmosaic.errors import MosaicError
from knotmosaic.grid import (elementary_move_as_certificate, grid_to_mosaic,
                             mosaic_to_grid, parse_move, read_grid,
                             serialize_grid)
from knotmosaic.invariants import fingerprint, forgetful, jones_polynomial
from knotmosaic.mosaic import (KnotMosaic, check_connectivity, format_inline,
                               inject, read_mosaic, render_ascii,
                               serialize_mosaic)
from knotmosaic.moves import generator_catalog, read_catalog, CATALOG_FILE
from knotmosaic.orbits import (Verdict, compute_orbits, mosaic_number_bounds,
                               same_type_n, write_census)
from knotmosaic.records import writer_for
from knotmosaic.search import Status, find_certificate
from knotmosaic.zoom import zoom5

logger = logging.getLogger(__name__)

NEGATIVE = 1
FAILURE = 2


def reports_errors(command):
    """Turn package errors into ``error: ...`` on stderr and exit status 2."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except MosaicError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(FAILURE)
    return wrapper


format_option = click.option(
    '--format', 'fmt', type=click.Choice(['text', 'json']), default='text',
    show_default=True, help='Report format.')


def emit(fmt, text, document):
    if fmt == 'json':
        click.echo(json.dumps(document, sort_keys=True))
    else:
        click.echo(text, nl=not text.endswith('\n'))


def mosaic_document(mosaic):
    return {'n': mosaic.n, 'rows': [list(row) for row in mosaic.rows]}


def grid_document(grid):
    return {'N': grid.N, 'X': list(grid.sigma_x), 'O': list(grid.sigma_o)}


def read_knot(path):
    return KnotMosaic.certify(read_mosaic(path))


SIDE = click.IntRange(min=1)


@click.group()
@click.option('-v', '--verbose', count=True, help='-v for info, -vv debug.')
def main(verbose):
    """Knot mosaics: validation, enumeration, move orbits, grid diagrams and
    invariants."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format='%(asctime)s %(name)s %(levelname)s %(message)s')
        logger.debug("verbosity %d", verbose)


@main.command()
@click.argument('mosaic_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--open', 'open_boundary', is_flag=True,
              help='Allow connection points on the outer boundary.')
@format_option
@reports_errors
def validate(mosaic_file, open_boundary, fmt):
    """Check that a mosaic is suitably connected."""
    mosaic = read_mosaic(mosaic_file)
    report = check_connectivity(mosaic, open_boundary=open_boundary)
    violation = str(report.violation) if report.violation else None
    text = 'ok' if report else f"not suitably connected: {violation}"
    emit(fmt, text, {'ok': report.ok, 'n': mosaic.n,
                     'violation': violation})
    if not report:
        sys.exit(NEGATIVE)


@main.command(name='enumerate')
@click.option('-n', 'n', type=SIDE, required=True, help='Side length.')
@click.option('--count-only', is_flag=True)
@click.option('-o', '--output', type=click.Path(dir_okay=False),
              help='Record file; a .zst suffix compresses it.')
@click.option('--jobs', type=SIDE, default=None,
              help='Worker processes (default from KNOTMOSAIC_JOBS).')
@click.option('--progress', is_flag=True)
@format_option
@reports_errors
def enumerate_command(n, count_only, output, jobs, progress, fmt):
    """List or count the knot n-mosaics."""
    jobs = get_settings().jobs if jobs is None else jobs
    if count_only:
        count = knot_mosaic_count(n)
    elif output:
        with writer_for(output) as writer:
            for mosaic in enumerate_knot_mosaics(n, jobs, progress):
                writer.write(mosaic)
        count = writer.count
    else:
        count = 0
        for mosaic in enumerate_knot_mosaics(n, jobs, progress):
            click.echo(format_inline(mosaic))
            count += 1
    emit(fmt, f"{count} mosaics", {'n': n, 'count': count})


@main.command()
@click.option('-n', 'n', type=SIDE, required=True, help='Side length.')
@click.option('-o', '--output', type=click.Path(dir_okay=False),
              help='Census file.')
@click.option('--jobs', type=SIDE, default=None,
              help='Worker processes for the enumeration.')
@click.option('--progress', is_flag=True)
@format_option
@reports_errors
def orbits(n, output, jobs, progress, fmt):
    """Partition the knot n-mosaics into move classes."""
    if progress or jobs is not None:
        partition = compute_orbits(n, progress=progress, jobs=jobs)
    else:
        partition = compute_orbits(n)
    if output:
        write_census(partition, output)
    emit(fmt, f"{len(partition)} classes", partition.to_json())


def _at_side(mosaic, n):
    if mosaic.n > n:
        raise click.BadParameter(f"a {mosaic.n}-mosaic does not fit side {n}")
    return inject(mosaic, n - mosaic.n)


@main.command()
@click.argument('first', type=click.Path(exists=True, dir_okay=False))
@click.argument('second', type=click.Path(exists=True, dir_okay=False))
@click.option('-n', 'n', type=SIDE, default=None,
              help='Decide equivalence inside n-mosaics.')
@click.option('--pad', type=int, default=None, help='Largest padding tried.')
@click.option('--depth', type=int, default=None, help='Largest move count.')
@click.option('-o', '--output', type=click.Path(dir_okay=False),
              help='Certificate file.')
@format_option
@reports_errors
def equiv(first, second, n, pad, depth, output, fmt):
    """Decide or certify that two mosaics show the same knot."""
    a, b = read_mosaic(first), read_mosaic(second)
    if n is not None:
        verdict = same_type_n(_at_side(a, n), _at_side(b, n), max_depth=depth)
        text = {Verdict.SAME: 'same class',
                Verdict.DISTINCT: 'distinct classes',
                Verdict.UNKNOWN: 'unknown'}[verdict]
        emit(fmt, text, {'n': n, 'verdict': verdict.value})
        if verdict is not Verdict.SAME:
            sys.exit(NEGATIVE)
        return
    result = find_certificate(a, b, max_depth=depth, max_pad=pad)
    document = {'status': result.status.value, 'explored': result.explored}
    if result.found:
        cert = result.certificate
        document['certificate'] = str(cert)
        if output:
            with open(output, 'w', encoding='utf8') as fh:
                fh.write(str(cert))
        text = f"certificate of {len(cert)} moves\n{cert}"
    elif result.status is Status.DISTINCT:
        text = 'distinct knots'
    else:
        text = 'no certificate within budget'
    emit(fmt, text, document)
    if not result.found:
        sys.exit(NEGATIVE)


@main.command()
@click.argument('mosaic_file', type=click.Path(exists=True, dir_okay=False))
@format_option
@reports_errors
def zoom(mosaic_file, fmt):
    """Print the 5x zoom of a mosaic."""
    zoomed = zoom5(read_mosaic(mosaic_file))
    emit(fmt, serialize_mosaic(zoomed), mosaic_document(zoomed))


@main.command()
@click.argument('grid_file', type=click.Path(exists=True, dir_okay=False))
@format_option
@reports_errors
def grid2mosaic(grid_file, fmt):
    """Draw a grid diagram as a knot mosaic."""
    mosaic = grid_to_mosaic(read_grid(grid_file))
    emit(fmt, serialize_mosaic(mosaic), mosaic_document(mosaic))


@main.command()
@click.argument('mosaic_file', type=click.Path(exists=True, dir_okay=False))
@format_option
@reports_errors
def mosaic2grid(mosaic_file, fmt):
    """Extract a grid diagram from a knot mosaic."""
    grid = mosaic_to_grid(read_mosaic(mosaic_file))
    if grid.N == 0 and fmt == 'text':
        click.echo('empty grid: the mosaic is blank', err=True)
    emit(fmt, serialize_grid(grid), grid_document(grid))


@main.command()
@click.argument('grid_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--move', 'spec', required=True,
              help='e.g. commute:columns:2, cyclic:rows:-1, '
                   'stabilize:3:X:NE, destabilize:2:3')
@click.option('--certify', is_flag=True,
              help='Also search mosaic moves realising the grid move.')
@click.option('--depth', type=int, default=None)
@click.option('-o', '--output', type=click.Path(dir_okay=False),
              help='Certificate file.')
@format_option
@reports_errors
def gridmove(grid_file, spec, certify, depth, output, fmt):
    """Apply an elementary move to a grid diagram."""
    grid = read_grid(grid_file)
    move = parse_move(spec)
    moved = move.apply(grid)
    text, document = serialize_grid(moved), grid_document(moved)
    result = None
    if certify:
        result = elementary_move_as_certificate(grid, move, max_depth=depth)
        document['status'] = result.status.value
        if result.found:
            document['certificate'] = str(result.certificate)
            text += str(result.certificate)
            if output:
                with open(output, 'w', encoding='utf8') as fh:
                    fh.write(str(result.certificate))
    emit(fmt, text, document)
    if result is not None and not result.found:
        if fmt == 'text':
            click.echo(f"no certificate: {result.status.value}", err=True)
        sys.exit(NEGATIVE)


@main.command(name='fingerprint')
@click.argument('mosaic_file', type=click.Path(exists=True, dir_okay=False))
@click.option('--jones', is_flag=True, help='Also print the Jones polynomial.')
@click.option('--pd', 'show_pd', is_flag=True, help='Also print the PD code.')
@format_option
@reports_errors
def fingerprint_command(mosaic_file, jones, show_pd, fmt):
    """Component count and normalised bracket polynomial of a knot
    mosaic."""
    mosaic = read_knot(mosaic_file)
    fp = fingerprint(mosaic)
    lines = [str(fp)]
    document = {'components': fp.component_count, 'bracket': str(fp.bracket)}
    if jones:
        document['jones'] = str(jones_polynomial(fp))
        lines.append(f"jones: {document['jones']}")
    if show_pd:
        pd = forgetful(mosaic)
        document['pd'] = [list(x.arcs) for x in pd.crossings]
        lines.append(str(pd).rstrip('\n'))
    emit(fmt, '\n'.join(lines), document)


@main.command()
@click.argument('mosaic_file', type=click.Path(exists=True, dir_okay=False))
@format_option
@reports_errors
def pd(mosaic_file, fmt):
    """PD code of the diagram drawn by a mosaic."""
    code = forgetful(read_mosaic(mosaic_file))
    emit(fmt, str(code), {
        'crossings': [list(x.arcs) for x in code.crossings],
        'free_loops': code.free_loops, 'components': code.components})


@main.command()
@click.argument('mosaic_file', type=click.Path(exists=True, dir_okay=False))
@format_option
@reports_errors
def render(mosaic_file, fmt):
    """Draw a mosaic with one character per tile."""
    mosaic = read_mosaic(mosaic_file)
    document = dict(mosaic_document(mosaic), text=render_ascii(mosaic))
    emit(fmt, document['text'], document)


@main.command(name='mosaic-number')
@click.option('--witness', 'witnesses', multiple=True, required=True,
              type=click.Path(exists=True, dir_okay=False),
              help='Knot mosaic file; may be repeated.')
@click.option('--max-n', type=SIDE, default=4, show_default=True,
              help='Largest side with a computed census.')
@format_option
@reports_errors
def mosaic_number(witnesses, max_n, fmt):
    """Bounds on the mosaic number of the knot drawn by each witness."""
    mosaics = [read_knot(path) for path in witnesses]
    partitions = [compute_orbits(n) for n in range(1, max_n + 1)]
    lines, document = [], []
    for path, mosaic in zip(witnesses, mosaics):
        bounds = mosaic_number_bounds(fingerprint(mosaic), partitions,
                                      mosaics)
        upper = '?' if bounds.upper is None else bounds.upper
        lines.append(f"{path}: lower {bounds.lower} upper {upper}")
        document.append(dict(bounds.to_json(), witness=path))
    emit(fmt, '\n'.join(lines), document)


@main.command()
@click.option('--list', 'listing', is_flag=True, help='List every pattern.')
@format_option
@reports_errors
def catalog(listing, fmt):
    """Size of the move catalog."""
    moves = generator_catalog()
    base = read_catalog(CATALOG_FILE)
    text = f"{len(moves)} patterns from {len(base)} base patterns"
    if listing:
        text += '\n' + '\n'.join(f"{p.k} {p.label}" for p in moves)
    emit(fmt, text, {'base': len(base), 'patterns': len(moves),
                     'labels': [p.label for p in moves]})


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
