"""Exception types raised across the package."""


class TopologyError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TopologyError):
    """Malformed input file."""


class ParityError(ParseError):
    """A point that is not on the BCC grid (a, b, c must share parity)."""


class FiltrationError(TopologyError):
    """A simplex order in which some prefix is not a subcomplex."""


class NotACycleError(TopologyError):
    pass


class NotABoundaryError(TopologyError):
    pass


class InvariantViolation(TopologyError):
    """An internal consistency check failed. Should never happen."""


class OracleSizeError(TopologyError):
    """Complex too large for the dense verification routines."""
