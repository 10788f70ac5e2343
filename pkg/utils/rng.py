# rng.py
"""
Reproducible pseudo-random inputs.

All randomness goes through NumPy's PCG64 bit generator so that the same
seed gives the same vectors on every platform and in every command.
"""

import numpy as np

import config.config as config


def make_generator(seed: int | None = None) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(config.DEFAULT_SEED if seed is None else seed))


def random_real_vector(n: int, seed: int | None = None) -> np.ndarray:
    """Uniform samples in [-1, 1)."""
    return make_generator(seed).uniform(-1.0, 1.0, size=n)


def random_complex_vector(n: int, seed: int | None = None) -> np.ndarray:
    rng = make_generator(seed)
    re = rng.uniform(-1.0, 1.0, size=n)
    im = rng.uniform(-1.0, 1.0, size=n)
    return re + 1j * im


def random_real_batch(trials: int, n: int, seed: int | None = None) -> np.ndarray:
    """A (trials, n) matrix of independent inputs drawn from one stream."""
    return make_generator(seed).uniform(-1.0, 1.0, size=(trials, n))
