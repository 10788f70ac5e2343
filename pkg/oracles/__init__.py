from .naive import (
    NAIVE_TRANSFORMS,
    TransformKind,
    naive_dct3,
    naive_dct4,
    naive_dft,
    naive_dst3,
    naive_dst4,
    naive_imdct,
    naive_mdct,
    output_scaling,
)

__all__ = [
    "NAIVE_TRANSFORMS",
    "TransformKind",
    "naive_dft",
    "naive_dct3",
    "naive_dst3",
    "naive_dct4",
    "naive_dst4",
    "naive_mdct",
    "naive_imdct",
    "output_scaling",
]
