"""
Critério de medição determinístico e estimativas de Monte Carlo.

O resultado de uma medição é 1 se r ≥ 1/2 e -1 caso contrário, isto é,
é decidido pelo primeiro elemento da sequência.
"""

import logging
import time
from enum import IntEnum
from typing import Callable, Optional

import numpy as np

from src.config import settings
from src.latitude.j_operator import ThresholdSpec, threshold_rows
from src.measurement.evolution import EvolutionSpec
from src.reports.schemas import StatReport
from src.sequences.bitseq import BitSequence, power_permutation, root_rows
from src.sequences.dyadic import DyadicExponent
from src.utils.logging import StructuredLogger
from src.utils.streams import ExperimentTag, TrialStream, map_trial_blocks

logger = logging.getLogger(__name__)
experiment_logger = StructuredLogger(__name__)


class Outcome(IntEnum):
    """Observável bivalente."""
    UP = 1
    DOWN = -1


def measure(s: BitSequence) -> Outcome:
    """
    Resultado da medição: +1 sse o primeiro elemento é +1 (r ≥ 1/2).
    """
    return Outcome(s[0])


def _evolved_rows(rows: np.ndarray, exponent: Optional[DyadicExponent]) -> np.ndarray:
    if exponent is None or exponent.is_identity():
        return rows
    permutation = power_permutation(exponent.log2_denominator, exponent.numerator)
    count, width = rows.shape
    block = exponent.block_length
    return permutation.apply(rows.reshape(-1, block)).reshape(count, width)


def _trial_width(window_bits: int, exponent: Optional[DyadicExponent]) -> int:
    # Tentativas evoluídas precisam de tuplas inteiras de 2^(n+1) elementos
    if exponent is None or exponent.is_identity():
        return window_bits
    block = exponent.block_length
    return -(-window_bits // block) * block


def sample_latitude_outcomes(
    theta: float,
    trials: int,
    seed: int,
    tag: int,
    window_bits: Optional[int] = None,
    n_jobs: Optional[int] = None,
    exponent: Optional[DyadicExponent] = None
) -> np.ndarray:
    """
    measure∘j_θ (opcionalmente após i^q) sobre sequências genéricas novas.

    Returns:
        Bits 0/1 (1 ↔ resultado +1), um por tentativa
    """
    spec = ThresholdSpec(theta=theta, window_bits=window_bits or settings.WINDOW_BITS)
    stream = TrialStream(seed, tag, _trial_width(spec.window_bits, exponent))

    def run_block(start: int, count: int) -> np.ndarray:
        rows = _evolved_rows(stream.block(start, count), exponent)
        outputs, _ = threshold_rows(spec, rows[:, :spec.window_bits])
        return outputs

    n_jobs = settings.PARALLEL_JOBS if n_jobs is None else n_jobs
    return map_trial_blocks(
        run_block, trials, n_jobs=n_jobs, block_size=stream.block_size
    )


def _timed_report(op: str, seed: int, params: dict, sampler: Callable[[], np.ndarray]) -> StatReport:
    started = time.perf_counter()
    values = sampler()
    report = StatReport.from_values(op, values, seed, params)
    experiment_logger.log_experiment(
        op, report.samples, report.estimate, report.std_error, seed,
        time.perf_counter() - started, params
    )
    return report


def born_estimate(
    theta: float,
    trials: int,
    seed: int,
    window_bits: Optional[int] = None,
    n_jobs: Optional[int] = None,
    evolution: Optional[EvolutionSpec] = None
) -> StatReport:
    """
    Fração de resultados +1 de measure∘j_θ; converge para (1 + sin θ)/2.

    Args:
        theta: Latitude
        trials: Número de tentativas
        seed: Semente de 64 bits
        window_bits: Largura da janela de j_θ
        n_jobs: Paralelismo (não altera o resultado)
        evolution: Se dada, cada sequência é evoluída por i^q antes de j_θ

    Returns:
        StatReport com a estimativa de P(+1)
    """
    if trials < 1:
        raise ValueError("trials deve ser positivo")
    w = window_bits or settings.WINDOW_BITS
    exponent = evolution.exponent if evolution is not None else None
    params = {"theta": theta, "window_bits": w}
    if exponent is not None:
        params["exponent"] = str(exponent)

    return _timed_report(
        "born", seed, params,
        lambda: sample_latitude_outcomes(
            theta, trials, seed, ExperimentTag.BORN, w, n_jobs, exponent
        ),
    )


def flip_fraction(
    n: int,
    trials: int,
    seed: int,
    n_jobs: Optional[int] = None
) -> StatReport:
    """
    Fração de sequências genéricas em que measure(i^(1/2^n)(s)) ≠ measure(s).

    O primeiro elemento de i^(1/2^n)(s) é -a_(2^(n+1)); refinar a longitude
    continua trocando o resultado com probabilidade 1/2.
    """
    if trials < 1:
        raise ValueError("trials deve ser positivo")
    width = 2 ** (n + 1)
    stream = TrialStream(seed, ExperimentTag.FLIP, width)

    def run_block(start: int, count: int) -> np.ndarray:
        rows = stream.block(start, count)
        rotated = root_rows(n, rows)
        return (rotated[:, 0] != rows[:, 0]).astype(np.uint8)

    n_jobs = settings.PARALLEL_JOBS if n_jobs is None else n_jobs
    return _timed_report(
        "noncomputability", seed, {"n": n},
        lambda: map_trial_blocks(
            run_block, trials, n_jobs=n_jobs, block_size=stream.block_size
        ),
    )


__all__ = [
    "Outcome",
    "measure",
    "sample_latitude_outcomes",
    "born_estimate",
    "flip_fraction",
]
