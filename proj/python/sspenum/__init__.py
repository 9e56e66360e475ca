"""Exact subset-sum enumeration over {1..n}.

Thin wrapper around the compiled _sspenum extension: exact distribution
tables (sum / length-sum / element), seven enumeration algorithms plus a
brute-force oracle, and the closed-form bounds they share.
"""

from ._sspenum import (
    SSPInfeasibleError,
    SSPResourceError,
    SSPScaleError,
    SSPValidationError,
    algorithms,
    decode,
    ed_count,
    ed_row,
    encode,
    enumerate,
    ld_count,
    max_sum,
    max_sum_for_length,
    maximal_subset,
    mid_sum,
    min_sum_for_length,
    minimal_subset,
    oracle_enumerate,
    peak_estimate,
    sd_count,
    sd_row,
)

__all__ = [
    "SSPInfeasibleError",
    "SSPResourceError",
    "SSPScaleError",
    "SSPValidationError",
    "algorithms",
    "decode",
    "ed_count",
    "ed_row",
    "encode",
    "enumerate",
    "ld_count",
    "max_sum",
    "max_sum_for_length",
    "maximal_subset",
    "mid_sum",
    "min_sum_for_length",
    "minimal_subset",
    "oracle_enumerate",
    "peak_estimate",
    "sd_count",
    "sd_row",
]

__version__ = "0.1.0"
