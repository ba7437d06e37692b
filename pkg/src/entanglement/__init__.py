"""
Amostrador de pares EPR e correlações de Bell.
"""

from .epr import (
    PairSample,
    EprSpec,
    sample_pair,
    pair_stream,
    correlation_estimate,
    correlation_scan,
    ChshSettings,
    bell_chsh_scan,
)

__all__ = [
    "PairSample",
    "EprSpec",
    "sample_pair",
    "pair_stream",
    "correlation_estimate",
    "correlation_scan",
    "ChshSettings",
    "bell_chsh_scan",
]
