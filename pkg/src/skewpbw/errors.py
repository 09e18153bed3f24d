"""Exception types shared across the package."""


class SkewPBWError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(SkewPBWError, ValueError):
    """Operands have incompatible lengths or sizes."""


class PresentationError(SkewPBWError, ValueError):
    """Presentation data is malformed or violates a structural requirement."""


class PresentationMismatch(SkewPBWError, ValueError):
    """Elements belonging to different presentations were combined."""


class UndefinedError(SkewPBWError, ValueError):
    """An operation is undefined for its argument (e.g. degree of zero)."""


class UnsupportedMethod(SkewPBWError):
    """The requested method does not apply to this presentation."""


class PreconditionError(SkewPBWError, ValueError):
    pass


class ParseError(SkewPBWError, ValueError):
    """Input text could not be parsed.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
