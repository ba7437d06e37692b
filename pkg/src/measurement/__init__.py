"""
Medição: critério de resultado, estatística de Born, evolução e incerteza.
"""

from .evolution import EvolutionSpec, evolve
from .criterion import Outcome, measure, born_estimate, flip_fraction, sample_latitude_outcomes
from .uncertainty import uncertainty_trig, uncertainty_mc

__all__ = [
    "EvolutionSpec",
    "evolve",
    "Outcome",
    "measure",
    "born_estimate",
    "flip_fraction",
    "sample_latitude_outcomes",
    "uncertainty_trig",
    "uncertainty_mc",
]
