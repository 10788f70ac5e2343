"""
MDCT and IMDCT through a size-N DCT-IV.

With the 2N inputs split into quarters (a, b, c, d) of length N/2, the MDCT is
the DCT-IV of (-c_r - d, a - b_r), where _r means reversed. That folding costs
N additions; the leading negation is free. The IMDCT is a DCT-IV whose outputs
are extended antisymmetrically (D_m, then -D_{2N-1-m}, then -D_{m-2N}) and
read from offset N/2, so it costs exactly one DCT-IV.

Overlap-adding consecutive IMDCT blocks of 50%-overlapped MDCT blocks gives N
times the original interior samples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np

from arithmetic.kernel import ExecutionContext
from trig.dct4 import Dct4Plan, build_dct4_plan, execute_dct4
from utils.errors import SizeMismatchError, require_length, require_power_of_two


def _block_size(length: int) -> int:
    if length % 2:
        raise SizeMismatchError(f"MDCT input length must be 2N, got {length}")
    n = length // 2
    require_power_of_two(n)
    return n


def fold_mdct_input(x: List[float], ctx: ExecutionContext) -> List[float]:
    n = len(x) // 2
    h, three_halves = n // 2, 3 * n // 2
    head = [ctx.neg(ctx.add(x[three_halves - 1 - i], x[three_halves + i])) for i in range(h)]
    tail = [ctx.sub(x[i - h], x[three_halves - 1 - i]) for i in range(h, n)]
    return head + tail


def execute_mdct(x: List[float], ctx: ExecutionContext, plan: Optional[Dct4Plan] = None) -> List[float]:
    n = len(x) // 2
    if n == 1:
        # C_0 = x_0 cos(pi/2) + x_1 cos(pi)
        return [ctx.neg(x[1])]
    plan = plan if plan is not None else build_dct4_plan(n)
    return execute_dct4(plan, fold_mdct_input(x, ctx), ctx)


def execute_imdct(c: List[float], ctx: ExecutionContext, plan: Optional[Dct4Plan] = None) -> List[float]:
    n = len(c)
    if n == 1:
        return [0.0, ctx.neg(c[0])]
    plan = plan if plan is not None else build_dct4_plan(n)
    d = execute_dct4(plan, c, ctx)
    out = []
    for i in range(2 * n):
        m = i + n // 2
        if m < n:
            out.append(d[m])
        elif m < 2 * n:
            out.append(ctx.neg(d[2 * n - 1 - m]))
        else:
            out.append(ctx.neg(d[m - 2 * n]))
    return out


def mdct(x, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """N outputs from 2N inputs."""
    values = np.asarray(x, dtype=np.float64)
    _block_size(len(values))
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_mdct(values.tolist(), ctx))


def imdct(c, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """2N outputs from N coefficients."""
    values = np.asarray(c, dtype=np.float64)
    require_power_of_two(len(values))
    ctx = ctx if ctx is not None else ExecutionContext.numeric()
    return np.array(execute_imdct(values.tolist(), ctx))


@dataclass
class OverlapState:
    """Second half of the previous IMDCT block, waiting for the next block."""

    n: int
    carry: np.ndarray = field(init=False)
    blocks_seen: int = 0

    def __post_init__(self) -> None:
        self.carry = np.zeros(self.n)

    def push(self, block) -> np.ndarray:
        """
        Add the block's first half to the carry and keep its second half.

        The first push returns the first block's unpaired first half unchanged,
        since the carry starts at zero.
        """
        block = np.asarray(block, dtype=np.float64)
        require_length(block, 2 * self.n, "IMDCT block")
        out = self.carry + block[: self.n]
        self.carry = block[self.n :].copy()
        self.blocks_seen += 1
        return out


def tdac_overlap_add(blocks: Iterable) -> np.ndarray:
    """
    Overlap-add 2N-sample blocks at hop N.

    Returns the overlapped sums only: len(blocks) - 1 segments of N samples
    each. The unpaired halves at both ends are dropped.
    """
    state: Optional[OverlapState] = None
    segments = []
    for block in blocks:
        block = np.asarray(block, dtype=np.float64)
        if state is None:
            if len(block) % 2:
                raise SizeMismatchError(f"blocks must have even length, got {len(block)}")
            state = OverlapState(len(block) // 2)
            state.push(block)
            continue
        segments.append(state.push(block))
    if not segments:
        return np.zeros(0)
    return np.concatenate(segments)


def lapped_round_trip(signal, n: int, ctx: Optional[ExecutionContext] = None) -> np.ndarray:
    """
    MDCT then IMDCT every 2N-sample block of signal at hop N and overlap-add.

    The result covers signal[N : len(signal) - N] and equals N times it.
    """
    signal = np.asarray(signal, dtype=np.float64)
    require_power_of_two(n)
    if len(signal) % n or len(signal) < 2 * n:
        raise SizeMismatchError(f"signal length {len(signal)} is not a multiple of N={n} of at least 2N")
    blocks = [imdct(mdct(signal[start : start + 2 * n], ctx), ctx) for start in range(0, len(signal) - n, n)]
    return tdac_overlap_add(blocks)
