"""Exception hierarchy.

Everything raised on purpose by this package derives from KernelError, so
callers can catch one type at an API boundary.  Parse and config errors are
kept separate from domain errors because the command line maps them to
different exit codes.
"""


class KernelError(Exception):
    """Base class for all errors raised by superweil."""


class SignatureMismatch(KernelError):
    """Operands live over different Grassmann signatures."""


class BodyZero(KernelError):
    """Inversion of an element whose scalar part is zero."""


class ShapeMismatch(KernelError):
    """Matrix operands have incompatible graded shapes."""


class GradingError(KernelError):
    """An entry's parity disagrees with its block position."""


class NotSquare(KernelError):
    """Operation requires a square graded shape."""


class NotEven(KernelError):
    """Operation requires all entries of even parity."""


class NotInvertible(KernelError):
    """A required block has a singular scalar part."""


class BodyNotZero(KernelError):
    """Nilpotent-only operation applied to an entry with nonzero scalar part."""


class OutsideBigCell(KernelError):
    """The point's chart denominators are not invertible."""


class UnsupportedLabel(KernelError):
    """Group family recognized but deliberately not implemented."""


class MorphismError(KernelError):
    """Generator images do not define a parity-preserving unital morphism."""


class ParseError(KernelError):
    """Serialized input is malformed or not in canonical form."""


class ConfigError(KernelError):
    """Command-line or suite configuration is invalid."""
