"""
Real-scalar arithmetic shared by every transform.

Transforms never use +, - or * on data directly. They call the methods of an
ExecutionContext, which either just computes (numeric mode) or computes and
tallies each executed addition and multiplication (audited mode). Negation is
free in both modes. Multiplying by a constant that is exactly +-1 is never
requested: callers take a separate code path instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from utils.errors import ModeError


class Mode(Enum):
    NUMERIC = "numeric"
    AUDITED = "audited"


@dataclass
class OpCounter:
    adds: int = 0
    mults: int = 0

    def flops(self) -> int:
        return self.adds + self.mults

    def copy(self) -> OpCounter:
        return OpCounter(self.adds, self.mults)

    def __sub__(self, other: OpCounter) -> OpCounter:
        return OpCounter(self.adds - other.adds, self.mults - other.mults)

    def as_dict(self) -> dict:
        return {"adds": self.adds, "mults": self.mults, "flops": self.flops()}


class ExecutionContext:
    """Owns at most one counter. Not meant to be shared between threads."""

    __slots__ = ("mode", "counter")

    def __init__(self, mode: Mode = Mode.NUMERIC, counter: Optional[OpCounter] = None):
        self.mode = mode
        if mode is Mode.AUDITED:
            self.counter = counter if counter is not None else OpCounter()
        else:
            self.counter = None

    @classmethod
    def numeric(cls) -> ExecutionContext:
        return cls(Mode.NUMERIC)

    @classmethod
    def audited(cls) -> ExecutionContext:
        return cls(Mode.AUDITED)

    @property
    def is_audited(self) -> bool:
        return self.counter is not None

    def add(self, a: float, b: float) -> float:
        if self.counter is not None:
            self.counter.adds += 1
        return a + b

    def sub(self, a: float, b: float) -> float:
        if self.counter is not None:
            self.counter.adds += 1
        return a - b

    def mul(self, a: float, c: float) -> float:
        if self.counter is not None:
            self.counter.mults += 1
        return a * c

    def neg(self, a: float) -> float:
        return -a

    def snapshot(self) -> OpCounter:
        """Current tally, without resetting it."""
        if self.counter is None:
            raise ModeError("counter_snapshot needs an audited context")
        return self.counter.copy()

    def __repr__(self) -> str:
        return f"ExecutionContext({self.mode.value}, {self.counter})"


def scalar_add(a: float, b: float, ctx: ExecutionContext) -> float:
    return ctx.add(a, b)


def scalar_sub(a: float, b: float, ctx: ExecutionContext) -> float:
    return ctx.sub(a, b)


def scalar_mul(a: float, c: float, ctx: ExecutionContext) -> float:
    return ctx.mul(a, c)


def scalar_negate(a: float, ctx: ExecutionContext) -> float:
    return ctx.neg(a)


def counter_snapshot(ctx: ExecutionContext) -> OpCounter:
    return ctx.snapshot()
