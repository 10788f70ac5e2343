from .errors import (
    TrigflopError,
    NotPowerOfTwoError,
    SizeMismatchError,
    IndexRangeError,
    ModeError,
    UnknownKindError,
    VectorFileError,
    ConfigError,
    UsageError,
    is_power_of_two,
    require_power_of_two,
    require_length,
)

__all__ = [
    "TrigflopError",
    "NotPowerOfTwoError",
    "SizeMismatchError",
    "IndexRangeError",
    "ModeError",
    "UnknownKindError",
    "VectorFileError",
    "ConfigError",
    "UsageError",
    "is_power_of_two",
    "require_power_of_two",
    "require_length",
]
