"""
Pares EPR sobre pontos duplamente computáveis e a correlação C(Δθ) = -cos Δθ.

Cada tentativa usa 1 + w bits de uma sequência genérica s:
    o  = measure(s)                                   (primeiro elemento)
    c  = measure(j_θc(cauda de s após o elemento 1)),  sin θc = cos Δθ
    o′ = -o·c
de modo que P(o′ = -o) = cos²(Δθ/2) e os marginais são justos.
"""

import logging
import math
import time
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.config import settings
from src.latitude.j_operator import ThresholdSpec, threshold_rows
from src.measurement.criterion import Outcome
from src.reports.schemas import StatReport
from src.utils.logging import StructuredLogger
from src.utils.streams import SEED_LIMIT, ExperimentTag, TrialStream, map_trial_blocks

logger = logging.getLogger(__name__)
experiment_logger = StructuredLogger(__name__)


@dataclass(frozen=True)
class PairSample:
    """Resultados de um par; trial_seed é o índice da tentativa no fluxo EPR."""
    o: Outcome
    o_prime: Outcome
    trial_seed: int


class EprSpec(BaseModel):
    """
    Orientação relativa, número de tentativas e semente.
    """
    model_config = ConfigDict(frozen=True)

    delta_theta: float = Field(..., ge=0, le=math.pi, description="Orientação relativa Δθ")
    trials: int = Field(default_factory=lambda: settings.DEFAULT_TRIALS, ge=1)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=SEED_LIMIT)
    window_bits: int = Field(default_factory=lambda: settings.WINDOW_BITS, ge=8)

    @property
    def partner_latitude(self) -> float:
        """θc = π/2 - Δθ, isto é, sin θc = cos Δθ."""
        return math.pi / 2 - self.delta_theta


def _pair_block(spec: EprSpec, stream: TrialStream, start: int, count: int) -> np.ndarray:
    """
    Resultados (o, o′) de um bloco de tentativas como matriz (count, 2) de ±1.
    """
    rows = stream.block(start, count)
    o = rows[:, 0].astype(np.int8) * 2 - 1
    partner = ThresholdSpec(theta=spec.partner_latitude, window_bits=spec.window_bits)
    c_bits, _ = threshold_rows(partner, rows[:, 1:])
    c = c_bits.astype(np.int8) * 2 - 1
    return np.stack([o, -o * c], axis=1)


def _stream(spec: EprSpec) -> TrialStream:
    return TrialStream(spec.seed, ExperimentTag.EPR, 1 + spec.window_bits)


def sample_pairs(spec: EprSpec, n_jobs: Optional[int] = None) -> np.ndarray:
    """Todas as tentativas de spec como matriz (trials, 2) de ±1."""
    stream = _stream(spec)
    n_jobs = settings.PARALLEL_JOBS if n_jobs is None else n_jobs
    return map_trial_blocks(
        lambda start, count: _pair_block(spec, stream, start, count),
        spec.trials,
        n_jobs=n_jobs,
        block_size=stream.block_size,
    )


def sample_pair(
    delta_theta: float,
    trial_seed: int,
    seed: Optional[int] = None,
    window_bits: Optional[int] = None
) -> PairSample:
    """
    Um par isolado: a tentativa trial_seed do fluxo EPR da semente dada.
    """
    spec = EprSpec(
        delta_theta=delta_theta,
        trials=1,
        seed=settings.DEFAULT_SEED if seed is None else seed,
        window_bits=window_bits or settings.WINDOW_BITS,
    )
    o, o_prime = _pair_block(spec, _stream(spec), trial_seed, 1)[0]
    return PairSample(Outcome(int(o)), Outcome(int(o_prime)), trial_seed)


def pair_stream(spec: EprSpec) -> Iterator[PairSample]:
    """Fluxo de pares de spec, gerado em blocos, na ordem das tentativas."""
    stream = _stream(spec)
    block = stream.block_size
    for start in range(0, spec.trials, block):
        count = min(block, spec.trials - start)
        for offset, (o, o_prime) in enumerate(_pair_block(spec, stream, start, count)):
            yield PairSample(Outcome(int(o)), Outcome(int(o_prime)), start + offset)


def correlation_estimate(spec: EprSpec, n_jobs: Optional[int] = None) -> StatReport:
    """
    C(Δθ) = média de o·o′ sobre os pares; converge para -cos Δθ.
    """
    started = time.perf_counter()
    pairs = sample_pairs(spec, n_jobs)
    products = pairs[:, 0] * pairs[:, 1]
    params = {"delta_theta": spec.delta_theta, "window_bits": spec.window_bits}
    report = StatReport.from_values("epr", products, spec.seed, params)
    experiment_logger.log_experiment(
        "epr", report.samples, report.estimate, report.std_error, spec.seed,
        time.perf_counter() - started, params
    )
    return report


def correlation_scan(
    points: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    window_bits: Optional[int] = None,
    n_jobs: Optional[int] = None
) -> List[StatReport]:
    """
    C(Δθ) numa grade uniforme de `points` ângulos em [0, π].
    """
    points = points or settings.EPR_SCAN_POINTS
    if points < 2:
        raise ValueError("A varredura precisa de ao menos 2 pontos")
    reports = []
    for delta in np.linspace(0.0, math.pi, points):
        spec = EprSpec(
            delta_theta=float(delta),
            trials=trials or settings.DEFAULT_TRIALS,
            seed=settings.DEFAULT_SEED if seed is None else seed,
            window_bits=window_bits or settings.WINDOW_BITS,
        )
        reports.append(correlation_estimate(spec, n_jobs))
    return reports


# ============================================================
# CHSH
# ============================================================

class ChshSettings(BaseModel):
    """
    Orientações (a, b, a′, b′) da combinação
    S = |C(a,b) - C(a,b′)| + |C(a′,b) + C(a′,b′)|.
    """
    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    a_prime: float
    b_prime: float

    @classmethod
    def optimal(cls) -> "ChshSettings":
        """Ângulos que atingem 2√2."""
        return cls(a=0.0, b=math.pi / 4, a_prime=math.pi / 2, b_prime=3 * math.pi / 4)

    def pairs(self) -> List[Tuple[float, float]]:
        return [
            (self.a, self.b),
            (self.a, self.b_prime),
            (self.a_prime, self.b),
            (self.a_prime, self.b_prime),
        ]


def relative_angle(x: float, y: float) -> float:
    """|x - y| reduzido a [0, π]."""
    delta = math.fmod(abs(x - y), 2 * math.pi)
    return 2 * math.pi - delta if delta > math.pi else delta


def chsh_value(correlations: Tuple[float, float, float, float]) -> float:
    ab, ab_prime, a_prime_b, a_prime_b_prime = correlations
    return abs(ab - ab_prime) + abs(a_prime_b + a_prime_b_prime)


def bell_chsh_scan(
    angles: ChshSettings,
    trials: int,
    seed: int,
    window_bits: Optional[int] = None,
    n_jobs: Optional[int] = None
) -> StatReport:
    """
    S_CHSH a partir de quatro estimativas de correlação; o limite clássico é 2
    e o valor nas orientações ótimas é 2√2.
    """
    reports = [
        correlation_estimate(
            EprSpec(
                delta_theta=relative_angle(x, y),
                trials=trials,
                seed=seed,
                window_bits=window_bits or settings.WINDOW_BITS,
            ),
            n_jobs,
        )
        for x, y in angles.pairs()
    ]
    estimates = tuple(r.estimate for r in reports)
    value = chsh_value(estimates)
    std_error = math.sqrt(sum(r.std_error ** 2 for r in reports))
    logger.info(f"CHSH: S = {value:.6f} ± {std_error:.6f}")
    return StatReport(
        op="chsh",
        estimate=value,
        std_error=std_error,
        samples=sum(r.samples for r in reports),
        seed=seed,
        params={
            "a": angles.a,
            "b": angles.b,
            "a_prime": angles.a_prime,
            "b_prime": angles.b_prime,
            "correlations": list(estimates),
        },
    )


__all__ = [
    "PairSample",
    "EprSpec",
    "sample_pair",
    "sample_pairs",
    "pair_stream",
    "correlation_estimate",
    "correlation_scan",
    "ChshSettings",
    "relative_angle",
    "chsh_value",
    "bell_chsh_scan",
]
