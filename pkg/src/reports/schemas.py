"""
Schemas dos relatórios de experimentos e da configuração de execução.
"""

import math
from typing import Any, Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.config import settings
from src.exceptions import LengthNotAligned
from src.utils.streams import SEED_LIMIT


# ============================================================
# Relatórios de Monte Carlo
# ============================================================

class StatReport(BaseModel):
    """
    Estimativa de Monte Carlo com erro padrão, contagem de amostras e semente.

    Serializa como objeto JSON plano
    {"op", "estimate", "std_error", "samples", "seed", "params"}.
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "op": "born",
                "estimate": 0.7502,
                "std_error": 0.00137,
                "samples": 100000,
                "seed": 20231017,
                "params": {"theta": 0.5235987755982988, "window_bits": 64},
            }
        },
    )

    op: str = Field(..., description="Nome da operação")
    estimate: float = Field(..., description="Estimativa pontual")
    std_error: float = Field(..., ge=0, description="Erro padrão da estimativa")
    samples: int = Field(..., ge=1, description="Número de amostras")
    seed: int = Field(..., ge=0, lt=SEED_LIMIT, description="Semente de 64 bits")
    params: Dict[str, Any] = Field(default_factory=dict, description="Parâmetros do experimento")

    @classmethod
    def from_values(
        cls,
        op: str,
        values: np.ndarray,
        seed: int,
        params: Optional[Dict[str, Any]] = None
    ) -> "StatReport":
        """
        Média de amostras independentes; erro padrão = desvio populacional / √n.
        """
        values = np.asarray(values, dtype=np.float64)
        samples = int(values.size)
        return cls(
            op=op,
            estimate=float(values.mean()),
            std_error=float(values.std() / math.sqrt(samples)),
            samples=samples,
            seed=seed,
            params=params or {},
        )

    @classmethod
    def from_batch_means(
        cls,
        op: str,
        values: np.ndarray,
        seed: int,
        params: Optional[Dict[str, Any]] = None,
        batches: int = 32
    ) -> "StatReport":
        """
        Média de amostras serialmente correlacionadas (janelas sobrepostas);
        o erro padrão vem da dispersão das médias de lotes contíguos.
        """
        values = np.asarray(values, dtype=np.float64)
        samples = int(values.size)
        batches = max(2, min(batches, samples // 2))
        usable = samples - samples % batches
        means = values[:usable].reshape(batches, -1).mean(axis=1)
        return cls(
            op=op,
            estimate=float(values.mean()),
            std_error=float(means.std(ddof=1) / math.sqrt(batches)),
            samples=samples,
            seed=seed,
            params=params or {},
        )

    def z_score(self, expected: float) -> float:
        """Desvio da estimativa em unidades de erro padrão (inf se erro zero e diferente)."""
        delta = self.estimate - expected
        if self.std_error == 0:
            return 0.0 if delta == 0 else math.inf
        return delta / self.std_error

    def within(self, expected: float, sigmas: float = 4.0) -> bool:
        return abs(self.z_score(expected)) <= sigmas


class UncertaintyReport(BaseModel):
    """
    As três estimativas da identidade de incerteza e o produto σ_θ̃·σ_λ.
    """
    model_config = ConfigDict(frozen=True)

    sigma_colatitude: StatReport
    sigma_longitude: StatReport
    mu_rotated: StatReport
    product: float = Field(..., description="σ_θ̃·σ_λ")
    abs_mu: float = Field(..., ge=0, description="|μ_θ̃′|")
    product_std_error: float = Field(..., ge=0)
    difference_std_error: float = Field(..., ge=0, description="Erro padrão de produto - |μ|")

    @property
    def discrepancy(self) -> float:
        return self.product - self.abs_mu


# ============================================================
# Configuração de execução
# ============================================================

class RunConfig(BaseModel):
    """
    Parâmetros comuns a todos os comandos de experimento.
    """
    model_config = ConfigDict(frozen=True)

    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=SEED_LIMIT)
    trials: int = Field(default_factory=lambda: settings.DEFAULT_TRIALS, ge=1)
    sequence_length: int = Field(default_factory=lambda: settings.SEQUENCE_LENGTH, ge=1)
    window_bits: int = Field(default_factory=lambda: settings.WINDOW_BITS, ge=8)
    output_format: Literal["json", "csv"] = Field(default_factory=lambda: settings.OUTPUT_FORMAT)
    parallel: int = Field(default_factory=lambda: settings.PARALLEL_JOBS)

    @field_validator('parallel')
    @classmethod
    def validate_parallel(cls, v: int) -> int:
        if v == 0 or v < -1:
            raise ValueError('parallel deve ser positivo ou -1 (todos os núcleos)')
        return v

    def require_alignment(self, max_n: int) -> None:
        """
        Exige sequence_length múltiplo de 2^(max_n+1).

        Raises:
            LengthNotAligned: comprimento incompatível
        """
        block = 2 ** (max_n + 1)
        if self.sequence_length % block:
            raise LengthNotAligned(self.sequence_length, block)


def reports_to_rows(reports: List[StatReport], key: str) -> List[Dict[str, Any]]:
    """Achata relatórios em linhas `key,estimate,std_error,samples` para CSV."""
    return [
        {
            key: report.params[key],
            "estimate": report.estimate,
            "std_error": report.std_error,
            "samples": report.samples,
        }
        for report in reports
    ]


__all__ = [
    "StatReport",
    "UncertaintyReport",
    "RunConfig",
    "reports_to_rows",
]
