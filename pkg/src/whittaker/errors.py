"""Exception hierarchy shared by all modules.

Everything raised on bad user input derives from WhittakerError so the CLI
can map it to exit code 2; InvariantViolation marks internal self-check
failures and maps to exit code 3.
"""


class WhittakerError(Exception):
    """Base class for all errors raised by this package."""


class InvariantViolation(WhittakerError):
    """An internal mathematical self-check failed (this is a bug)."""


# ring / series errors

class DivisionByZero(WhittakerError):
    pass


class UnboundVariable(WhittakerError):
    pass


class PoleAtPoint(WhittakerError):
    pass


class InsufficientOrder(WhittakerError):
    pass


# representation-data errors

class NotGeneric(WhittakerError):
    """A pair of segments is linked; carries the offending indices."""

    def __init__(self, i: int, j: int):
        super().__init__(f"segments {i} and {j} are linked")
        self.i = i
        self.j = j


class InvalidCharacter(WhittakerError):
    pass


class BadDegree(WhittakerError):
    pass


class BadOrder(WhittakerError):
    pass


# Whittaker-function errors

class BadRank(WhittakerError):
    pass


class UnsupportedWeight(WhittakerError):
    pass


# integral-engine errors

class BadRanks(WhittakerError):
    pass


class Unsupported(WhittakerError):
    pass


# configuration / CLI errors

class ConfigError(WhittakerError):
    pass
