"""Line-oriented record files: one inline mosaic per line, optionally
zstandard-compressed (``.zst`` suffix)."""
import io
import logging
from abc import ABC, abstractmethod
from typing import Iterable, Iterator, List

import zstandard as zstd

from knotmosaic.errors import MosaicParseError
from knotmosaic.mosaic import Mosaic, format_inline, parse_inline

logger = logging.getLogger(__name__)

ZST_SUFFIX = '.zst'
MAX_WINDOW_SIZE = 2 ** 31


def is_compressed(fpath) -> bool:
    return str(fpath).endswith(ZST_SUFFIX)


def decompress(fh):
    dctx = zstd.ZstdDecompressor(max_window_size=MAX_WINDOW_SIZE)
    reader = dctx.stream_reader(fh)
    yield from io.TextIOWrapper(reader, encoding='utf-8')


class Reader(ABC):
    def __init__(self, fpath: str):
        self.fpath = str(fpath)

    @abstractmethod
    def lines(self) -> Iterator[str]:
        pass

    def __iter__(self) -> Iterator[Mosaic]:
        for lineno, line in enumerate(self.lines(), start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            try:
                yield parse_inline(line)
            except MosaicParseError as e:
                raise MosaicParseError(f"{self.fpath}:{lineno}: {e}")


class LineFileReader(Reader):
    def lines(self):
        with open(self.fpath, encoding='utf8') as fh:
            yield from fh


class ZstdFileReader(Reader):
    def lines(self):
        logger.debug("reading %s", self.fpath)
        with open(self.fpath, 'rb') as fh:
            yield from decompress(fh)


class Writer(ABC):
    def __init__(self, fpath: str):
        self.fpath = str(fpath)
        self.fhandle = None
        self.count = 0

    @abstractmethod
    def open(self):
        pass

    def write(self, mosaic: Mosaic):
        if self.fhandle is None:
            self.fhandle = self.open()
        self.fhandle.write(format_inline(mosaic) + '\n')
        self.count += 1

    def close(self):
        if self.fhandle is not None:
            self.fhandle.close()
            self.fhandle = None
        logger.info("wrote %d records to %s", self.count, self.fpath)

    def __enter__(self):
        self.fhandle = self.open()
        return self

    def __exit__(self, *exc):
        self.close()


class LineFileWriter(Writer):
    def open(self):
        return open(self.fpath, 'w', encoding='utf8')


class ZstdFileWriter(Writer):
    def __init__(self, fpath: str, level: int = 10):
        super(ZstdFileWriter, self).__init__(fpath)
        self.level = level

    def open(self):
        raw = open(self.fpath, 'wb')
        stream = zstd.ZstdCompressor(level=self.level).stream_writer(raw)
        return io.TextIOWrapper(stream, encoding='utf-8')


def reader_for(fpath) -> Reader:
    return ZstdFileReader(fpath) if is_compressed(fpath) \
        else LineFileReader(fpath)


def writer_for(fpath) -> Writer:
    return ZstdFileWriter(fpath) if is_compressed(fpath) \
        else LineFileWriter(fpath)


def write_records(fpath, mosaics: Iterable[Mosaic]) -> int:
    with writer_for(fpath) as writer:
        for mosaic in mosaics:
            writer.write(mosaic)
    return writer.count


def read_records(fpath) -> List[Mosaic]:
    return list(reader_for(fpath))
