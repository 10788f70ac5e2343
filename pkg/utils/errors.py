"""
Exception hierarchy shared by every trigflop package.

The CLI maps any TrigflopError to exit status 2 (usage/input problems).
"""


class TrigflopError(Exception):
    """Base class for all library errors."""


class NotPowerOfTwoError(TrigflopError, ValueError):
    """A transform size is not of the form 2^m."""


class SizeMismatchError(TrigflopError, ValueError):
    """An input vector does not have the length the plan expects."""


class IndexRangeError(TrigflopError, ValueError):
    """A constant was requested outside its defined index range."""


class ModeError(TrigflopError, RuntimeError):
    """An audited-only operation was used on a numeric context."""


class UnknownKindError(TrigflopError, KeyError):
    """An audit or CLI transform kind is not recognised."""


class VectorFileError(TrigflopError, ValueError):
    """A vector file could not be parsed. The message carries path:line."""


class ConfigError(TrigflopError, KeyError):
    """A configuration override names a key that does not exist."""


class UsageError(TrigflopError, ValueError):
    """A command-line option combination makes no sense for the chosen transform."""


def is_power_of_two(n: int) -> bool:
    return isinstance(n, int) and not isinstance(n, bool) and n >= 1 and (n & (n - 1)) == 0


def require_power_of_two(n: int, what: str = "N") -> int:
    """Return log2(n), raising NotPowerOfTwoError when n is not 2^m."""
    if not is_power_of_two(n):
        raise NotPowerOfTwoError(f"{what} must be a power of two, got {n!r}")
    return n.bit_length() - 1


def require_length(values, expected: int, what: str = "input") -> None:
    if len(values) != expected:
        raise SizeMismatchError(f"{what} has length {len(values)}, expected {expected}")
