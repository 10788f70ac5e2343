"""
Definitional O(N^2) transforms, used as ground truth.

Every kernel argument is an integer product reduced modulo the kernel period
before it becomes an angle, so large N do not lose accuracy in the argument.
All functions accept a single vector or a batch with the transform axis last.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from constants.scale import variant_scale
from utils.errors import SizeMismatchError

_ROW_BLOCK = 512


class TransformKind(Enum):
    DFT = "dft"
    DCT3 = "dct3"
    DST3 = "dst3"
    DCT4 = "dct4"
    DST4 = "dst4"
    MDCT = "mdct"
    IMDCT = "imdct"


def _apply_kernel(x: np.ndarray, rows: np.ndarray, cols: np.ndarray, period: int, trig) -> np.ndarray:
    """out[..., r] = sum_c x[..., c] * trig(2*pi*((rows[r]*cols[c]) mod period)/period)."""
    out_dtype = np.result_type(x.dtype, trig(np.zeros(1)).dtype)
    out = np.empty(x.shape[:-1] + (len(rows),), dtype=out_dtype)
    for start in range(0, len(rows), _ROW_BLOCK):
        block = rows[start : start + _ROW_BLOCK]
        phase = np.outer(block, cols) % period
        kernel = trig(2.0 * np.pi * phase / period)
        out[..., start : start + len(block)] = x @ kernel.T
    return out


def _real(x) -> np.ndarray:
    return np.asarray(x, dtype=np.float64)


def _cexp(angle: np.ndarray) -> np.ndarray:
    return np.exp(-1j * angle)


def naive_dft(x) -> np.ndarray:
    """X_k = sum_n x_n w_N^{nk}."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[-1]
    idx = np.arange(n, dtype=np.int64)
    return _apply_kernel(x, idx, idx, n, _cexp)


def naive_dct3(x) -> np.ndarray:
    """C_k = sum_{n=0}^{N-1} x_n cos[pi n (k + 1/2) / N]."""
    x = _real(x)
    n = x.shape[-1]
    idx = np.arange(n, dtype=np.int64)
    return _apply_kernel(x, 2 * idx + 1, idx, 4 * n, np.cos)


def naive_dst3(x) -> np.ndarray:
    """S_k = sum_{n=1}^{N} x_n sin[pi n (k + 1/2) / N]; element j of x holds x_{j+1}."""
    x = _real(x)
    n = x.shape[-1]
    idx = np.arange(n, dtype=np.int64)
    return _apply_kernel(x, 2 * idx + 1, idx + 1, 4 * n, np.sin)


def naive_dct4(x) -> np.ndarray:
    """C_k = sum_n x_n cos[pi (n + 1/2)(k + 1/2) / N]."""
    x = _real(x)
    n = x.shape[-1]
    odd = 2 * np.arange(n, dtype=np.int64) + 1
    return _apply_kernel(x, odd, odd, 8 * n, np.cos)


def naive_dst4(x) -> np.ndarray:
    """S_k = sum_n x_n sin[pi (n + 1/2)(k + 1/2) / N]."""
    x = _real(x)
    n = x.shape[-1]
    odd = 2 * np.arange(n, dtype=np.int64) + 1
    return _apply_kernel(x, odd, odd, 8 * n, np.sin)


def naive_mdct(x) -> np.ndarray:
    """C_k = sum_{n=0}^{2N-1} x_n cos[pi (n + 1/2 + N/2)(k + 1/2) / N], for 2N inputs."""
    x = _real(x)
    length = x.shape[-1]
    if length % 2:
        raise SizeMismatchError(f"MDCT input length must be even, got {length}")
    n = length // 2
    return _apply_kernel(x, 2 * np.arange(n, dtype=np.int64) + 1, 2 * np.arange(2 * n, dtype=np.int64) + 1 + n, 8 * n, np.cos)


def naive_imdct(c) -> np.ndarray:
    """y_n = sum_k C_k cos[pi (n + 1/2 + N/2)(k + 1/2) / N], for n = 0..2N-1."""
    c = _real(c)
    n = c.shape[-1]
    return _apply_kernel(c, 2 * np.arange(2 * n, dtype=np.int64) + 1 + n, 2 * np.arange(n, dtype=np.int64) + 1, 8 * n, np.cos)


NAIVE_TRANSFORMS = {
    TransformKind.DFT: naive_dft,
    TransformKind.DCT3: naive_dct3,
    TransformKind.DST3: naive_dst3,
    TransformKind.DCT4: naive_dct4,
    TransformKind.DST4: naive_dst4,
    TransformKind.MDCT: naive_mdct,
    TransformKind.IMDCT: naive_imdct,
}


def output_scaling(kind: TransformKind, n: int, variant: int = 0) -> np.ndarray:
    """
    Divisors applied by the scaled fast transforms, one per output.

    DFT: s(variant*N, k). DCT3/DST3: s(4*variant*N, 2k+1). DCT4 with variant 8:
    s(8N, 2k+1). Variant 0 means unscaled.
    """
    if kind is TransformKind.DFT:
        return np.array([variant_scale(variant, n, k) for k in range(n)])
    if kind in (TransformKind.DCT3, TransformKind.DST3):
        return np.array([variant_scale(variant, 4 * n, 2 * k + 1) for k in range(n)])
    if kind is TransformKind.DCT4 and variant in (0, 8):
        return np.array([variant_scale(variant, n, 2 * k + 1) for k in range(n)])
    raise ValueError(f"no output scaling descriptor for {kind.value} variant {variant}")
