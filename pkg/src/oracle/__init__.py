"""
Oráculo de Hilbert em forma fechada para validar as estatísticas do modelo.
"""

from .dirac import (
    StateVector2,
    state_from_point,
    prob_up,
    evolve_state,
    singlet_correlation,
    singlet_joint_probabilities,
)

__all__ = [
    "StateVector2",
    "state_from_point",
    "prob_up",
    "evolve_state",
    "singlet_correlation",
    "singlet_joint_probabilities",
]
