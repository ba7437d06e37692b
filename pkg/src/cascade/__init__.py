"""
Soma de previsibilidade de uma cascata turbulenta.
"""

from .predictability import (
    CascadeSpec,
    Divergent,
    turnover_time,
    omega_sum,
    omega_limit,
    tail_bound,
    octave_table,
)

__all__ = [
    "CascadeSpec",
    "Divergent",
    "turnover_time",
    "omega_sum",
    "omega_limit",
    "tail_bound",
    "octave_table",
]
