from .kernel import (
    ExecutionContext,
    Mode,
    OpCounter,
    counter_snapshot,
    scalar_add,
    scalar_mul,
    scalar_negate,
    scalar_sub,
)

__all__ = [
    "ExecutionContext",
    "Mode",
    "OpCounter",
    "counter_snapshot",
    "scalar_add",
    "scalar_sub",
    "scalar_mul",
    "scalar_negate",
]
