"""
Utilitários compartilhados: logging e fluxos de bits semeados.
"""

from .logging import setup_logging, StructuredLogger
from .streams import TrialStream, ExperimentTag, map_trial_blocks, validate_seed

__all__ = [
    "setup_logging",
    "StructuredLogger",
    "TrialStream",
    "ExperimentTag",
    "map_trial_blocks",
    "validate_seed",
]
