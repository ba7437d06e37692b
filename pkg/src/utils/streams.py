"""
Fluxos de bits semeados para os experimentos de Monte Carlo.

A tentativa i de um experimento com semente s e etiqueta g usa os bits do
gerador Philox com chave s + 2^64·g e contador i·c, onde c é o número de
contadores reservados por tentativa. Os bits de uma tentativa não dependem
do tamanho do bloco nem do número de processos.
"""

import logging
from enum import IntEnum
from typing import Callable, List, Optional

import numpy as np
from joblib import Parallel, delayed

from src.config import settings
from src.exceptions import InvalidSeed

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64

# Philox produz 4 palavras de 64 bits por incremento do contador
WORDS_PER_COUNTER = 4
BITS_PER_COUNTER = 64 * WORDS_PER_COUNTER


class ExperimentTag(IntEnum):
    """Etiquetas que separam os fluxos de experimentos com a mesma semente."""
    GENERATE = 1
    BORN = 2
    FLIP = 3
    EPR = 4
    UNCERTAINTY_COLATITUDE = 5
    UNCERTAINTY_LONGITUDE = 6
    UNCERTAINTY_ROTATED = 7
    LATITUDE = 8


def validate_seed(seed: int) -> int:
    """
    Valida uma semente de 64 bits sem sinal.
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidSeed(f"Semente deve ser inteira, recebido {seed!r}")
    seed = int(seed)
    if not 0 <= seed < SEED_LIMIT:
        raise InvalidSeed(f"Semente {seed} fora do intervalo [0, 2^64)")
    return seed


class TrialStream:
    """
    Fluxo de bits por tentativa, derivado de (semente, etiqueta).
    """

    def __init__(self, seed: int, tag: int, bits_per_trial: int):
        if bits_per_trial < 1:
            raise ValueError("bits_per_trial deve ser positivo")
        self.seed = validate_seed(seed)
        self.tag = int(tag)
        self.bits_per_trial = bits_per_trial
        self.counters_per_trial = -(-bits_per_trial // BITS_PER_COUNTER)
        self.words_per_trial = self.counters_per_trial * WORDS_PER_COUNTER

    @property
    def key(self) -> int:
        return self.seed + (self.tag << 64)

    @property
    def block_size(self) -> int:
        """Tentativas por bloco; tentativas largas cabem em TRIAL_BLOCK_BITS."""
        by_bits = settings.TRIAL_BLOCK_BITS // self.bits_per_trial
        return max(1, min(settings.TRIAL_BLOCK_SIZE, by_bits))

    def block(self, start: int, count: int) -> np.ndarray:
        """
        Bits (0/1) das tentativas start..start+count-1, uma por linha.
        """
        bit_generator = np.random.Philox(
            key=self.key, counter=start * self.counters_per_trial
        )
        words = bit_generator.random_raw(count * self.words_per_trial)
        raw = words.astype('<u8', copy=False).view(np.uint8)
        bits = np.unpackbits(raw, bitorder='little').reshape(count, -1)
        return bits[:, :self.bits_per_trial]

    def trial(self, index: int) -> np.ndarray:
        """Bits de uma única tentativa."""
        return self.block(index, 1)[0]

    def __repr__(self) -> str:
        return (
            f"TrialStream(seed={self.seed}, tag={self.tag}, "
            f"bits_per_trial={self.bits_per_trial})"
        )


def map_trial_blocks(
    func: Callable[[int, int], np.ndarray],
    trials: int,
    n_jobs: int = 1,
    block_size: Optional[int] = None
) -> np.ndarray:
    """
    Aplica func(start, count) em blocos de tentativas e concatena em ordem.

    Args:
        func: Função de bloco (deve ser serializável para n_jobs != 1)
        trials: Número total de tentativas
        n_jobs: Grau de paralelismo do joblib
        block_size: Tentativas por bloco

    Returns:
        Resultados por tentativa, na ordem das tentativas
    """
    block_size = block_size or settings.TRIAL_BLOCK_SIZE
    ranges = [
        (start, min(block_size, trials - start))
        for start in range(0, trials, block_size)
    ]
    logger.debug(
        f"Executando {trials} tentativas em {len(ranges)} blocos (n_jobs={n_jobs})"
    )

    if n_jobs == 1 or len(ranges) == 1:
        results: List[np.ndarray] = [func(start, count) for start, count in ranges]
    else:
        results = Parallel(n_jobs=n_jobs)(
            delayed(func)(start, count) for start, count in ranges
        )

    return np.concatenate(results)


def stream_sequence_bits(seed: int, tag: int, length: int) -> np.ndarray:
    """
    Bits de uma única sequência longa do fluxo (tentativa 0).
    """
    return TrialStream(seed, tag, length).trial(0)


__all__ = [
    "TrialStream",
    "ExperimentTag",
    "map_trial_blocks",
    "stream_sequence_bits",
    "validate_seed",
]
