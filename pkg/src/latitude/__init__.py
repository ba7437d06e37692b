"""
Operador de latitude j_θ.
"""

from .j_operator import (
    ThresholdSpec,
    LatitudeResult,
    threshold_bits,
    compare_windows,
    threshold_rows,
    apply_j,
    latitude_stats,
    latitude_estimate,
)

__all__ = [
    "ThresholdSpec",
    "LatitudeResult",
    "threshold_bits",
    "compare_windows",
    "threshold_rows",
    "apply_j",
    "latitude_stats",
    "latitude_estimate",
]
