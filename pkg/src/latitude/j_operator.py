"""
Operador de latitude j_θ.

Para cada posição n, a cauda de w elementos que começa em n é lida como
dígitos binários (+1 ↦ 1, -1 ↦ 0) e comparada lexicograficamente com os w
primeiros dígitos de t = (1 - sin θ)/2: d_n = +1 se cauda ≥ t, senão -1.
Empates (cauda igual aos w dígitos) resolvem para +1 e são contados.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import gmpy2
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from pydantic import BaseModel, ConfigDict, Field

from src.config import settings
from src.exceptions import SequenceTooShort
from src.reports.schemas import StatReport
from src.sequences.bitseq import BitSequence, SequenceStats, random_sequence, stats
from src.utils.streams import ExperimentTag

logger = logging.getLogger(__name__)

# Largura de cada bloco comparado como inteiro de 64 bits
CHUNK_BITS = 64

# Janelas processadas por vez em apply_j
ROW_BLOCK = 1 << 16


class ThresholdSpec(BaseModel):
    """
    Latitude alvo e largura da janela de comparação.
    """
    model_config = ConfigDict(frozen=True)

    theta: float = Field(..., ge=-math.pi / 2, le=math.pi / 2, description="Latitude θ")
    window_bits: int = Field(
        default_factory=lambda: settings.WINDOW_BITS,
        ge=8,
        description="Largura w da cauda comparada"
    )

    @property
    def threshold(self) -> float:
        """t = (1 - sin θ)/2, em ponto flutuante (só para relatórios)."""
        return (1.0 - math.sin(self.theta)) / 2.0

    @property
    def pole(self) -> int:
        """+1 ou -1 se sin θ vale exatamente ±1 em dupla precisão; 0 caso contrário."""
        sine = math.sin(self.theta)
        if sine == 1.0:
            return 1
        if sine == -1.0:
            return -1
        return 0


@dataclass(frozen=True)
class LatitudeResult:
    """Saída de j_θ: sequência de L - w + 1 elementos e número de empates."""
    output: BitSequence
    tie_count: int

    @property
    def tie_fraction(self) -> float:
        return self.tie_count / self.output.length


def threshold_bits(spec: ThresholdSpec) -> np.ndarray:
    """
    Os w primeiros dígitos binários de (1 - sin θ)/2, truncados.

    O seno é avaliado com gmpy2 em precisão de w + GUARD_BITS bits além dos
    53 bits de θ. Nos polos (sin θ = ±1 em dupla precisão) t vale 0 ou 1
    exatamente; t = 1 é representado por w dígitos 1.
    """
    w = spec.window_bits
    if spec.pole == 1:
        return np.zeros(w, dtype=np.uint8)
    if spec.pole == -1:
        return np.ones(w, dtype=np.uint8)
    value = _scaled_threshold(spec.theta, w, settings.GUARD_BITS)
    return np.array([int(c) for c in format(value, f"0{w}b")], dtype=np.uint8)


@lru_cache(maxsize=128)
def _scaled_threshold(theta: float, w: int, guard_bits: int) -> int:
    """floor(t·2^w) limitado a [0, 2^w - 1]."""
    with gmpy2.context(precision=w + guard_bits + 64):
        sine = gmpy2.sin(gmpy2.mpfr(theta))
        value = int(gmpy2.floor(gmpy2.mul_2exp((1 - sine) / 2, w)))
    return min(max(value, 0), (1 << w) - 1)


def _pack_chunk(columns: np.ndarray) -> np.ndarray:
    """Empacota até 64 colunas de bits (MSB primeiro) em inteiros uint64."""
    packed = np.packbits(columns, axis=1)
    if packed.shape[1] < 8:
        packed = np.pad(packed, ((0, 0), (0, 8 - packed.shape[1])))
    return np.ascontiguousarray(packed).view('>u8').ravel()


def compare_windows(windows: np.ndarray, digits: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Compara cada linha de bits com os dígitos do limiar, lexicograficamente.

    Args:
        windows: Matriz (linhas, w) de bits 0/1 (pode ser uma visão deslizante)
        digits: Dígitos do limiar, tamanho w

    Returns:
        (máscara linha ≥ limiar, máscara de empates)
    """
    rows, width = windows.shape
    if width != digits.size:
        raise ValueError(f"Janela de {width} bits contra limiar de {digits.size}")

    greater = np.zeros(rows, dtype=bool)
    undecided = np.ones(rows, dtype=bool)
    for start in range(0, width, CHUNK_BITS):
        stop = min(start + CHUNK_BITS, width)
        values = _pack_chunk(windows[:, start:stop])
        target = _pack_chunk(digits[None, start:stop])[0]
        greater |= undecided & (values > target)
        undecided &= values == target

    return greater | undecided, undecided


def threshold_rows(spec: ThresholdSpec, rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    j_θ aplicado a uma janela por linha (tentativas de Monte Carlo).

    Returns:
        (bits de saída por linha, máscara de empates)
    """
    if spec.pole == -1:
        count = rows.shape[0]
        return np.zeros(count, dtype=np.uint8), np.zeros(count, dtype=bool)
    geq, ties = compare_windows(rows, threshold_bits(spec))
    return geq.astype(np.uint8), ties


def apply_j(spec: ThresholdSpec, s: BitSequence) -> LatitudeResult:
    """
    Mapeia uma sequência equatorial para a latitude θ.

    Raises:
        SequenceTooShort: comprimento menor que a janela
    """
    w = spec.window_bits
    if s.length < w:
        raise SequenceTooShort(s.length, w)

    windows = sliding_window_view(s.bits(), w)
    outputs = []
    tie_count = 0
    for start in range(0, windows.shape[0], ROW_BLOCK):
        block, ties = threshold_rows(spec, windows[start:start + ROW_BLOCK])
        outputs.append(block)
        tie_count += int(np.count_nonzero(ties))
    output = np.concatenate(outputs)
    logger.debug(
        f"j_θ com θ={spec.theta:.6f}, w={w}: {output.size} elementos, {tie_count} empates"
    )
    return LatitudeResult(output=BitSequence.from_bits(output), tie_count=tie_count)


def latitude_stats(spec: ThresholdSpec, s: BitSequence) -> SequenceStats:
    """
    Estatísticas da saída de j_θ: média esperada sin θ, desvio |cos θ|.
    """
    return stats(apply_j(spec, s).output)


def latitude_estimate(spec: ThresholdSpec, length: int, seed: int) -> StatReport:
    """
    Média da saída de j_θ sobre uma única sequência genérica longa.

    As janelas se sobrepõem, então o erro padrão vem de médias por lotes.
    """
    s = random_sequence(length, seed, ExperimentTag.LATITUDE)
    result = apply_j(spec, s)
    return StatReport.from_batch_means(
        "latitude",
        result.output.values(),
        seed,
        {
            "theta": spec.theta,
            "window_bits": spec.window_bits,
            "length": length,
            "tie_count": result.tie_count,
        },
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
