"""Exceptions raised by knotmosaic."""


class MosaicError(Exception):
    """Base class for every error raised by the package."""


class BoundsError(MosaicError, IndexError):
    pass


class SideLengthError(MosaicError, ValueError):
    """A side length below 1."""


class MosaicParseError(MosaicError, ValueError):
    """Malformed mosaic, grid, census or certificate text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None \
                else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super(MosaicParseError, self).__init__(message)


class CapacityError(MosaicError):
    """A configured resource cap was exceeded; partial results are dropped."""


class MoveNotApplicableError(MosaicError):
    pass


class CertificateCorruptError(MosaicError):
    pass


class SideMismatchError(MosaicError, ValueError):
    pass


class NotSuitablyConnectedError(MosaicError, ValueError):
    pass


class ConfigError(MosaicError):
    pass
