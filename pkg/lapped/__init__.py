from .mdct import OverlapState, execute_imdct, execute_mdct, fold_mdct_input, imdct, lapped_round_trip, mdct, tdac_overlap_add

__all__ = [
    "OverlapState",
    "execute_mdct",
    "execute_imdct",
    "fold_mdct_input",
    "mdct",
    "imdct",
    "lapped_round_trip",
    "tdac_overlap_add",
]
