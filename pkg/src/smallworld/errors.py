"""Exception hierarchy shared by the library and the CLI."""


class SmallWorldError(Exception):
    """Base class for every error raised by this package."""


class UsageError(SmallWorldError, ValueError):
    """Invalid arguments: wrong graph kind, bad mode, out-of-range node, ..."""


class DataError(SmallWorldError):
    """Input data could not be used (unreadable or malformed)."""


class ParseError(DataError, ValueError):
    def __init__(self, lineno: int, line: str, reason: str = "expected at least two tokens"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class UndefinedStatisticError(DataError, ValueError):
    """A statistic is mathematically undefined for the given graph."""


class UndefinedAssortativityError(UndefinedStatisticError):
    """Pearson correlation is 0/0 because an endpoint-degree sequence is constant."""
