"""Exception types raised across the package."""


class QuartikaError(Exception):
    """Base class for domain errors."""


class NotASquare(QuartikaError, ValueError):
    """An exact square root was requested of a non-square."""


class ExceptionalPoint(QuartikaError, ZeroDivisionError):
    """A birational map was evaluated where one of its denominators vanishes."""


class DegenerateFamily(QuartikaError):
    """A closed-form family member collapses to a trivial solution."""


class OutOfScope(QuartikaError, ValueError):
    """Parameters fall in a case this package does not treat (e.g. opposite parity)."""


class NoNontrivialDirection(QuartikaError):
    """No rational tangent direction other than the trivial one exists."""


class DegenerateStep(QuartikaError):
    """A descent step reproduced the seed or produced t = 0."""


class ZeroQuartic(QuartikaError):
    """The t^4 coefficient vanished along the chosen direction."""
