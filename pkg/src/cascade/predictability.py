"""
Soma de previsibilidade por oitavas de um espectro turbulento.

Com E(k) = C·k^s, o tempo de giro de um vórtice é
τ(k) = k^(-3/2)·E(k)^(-1/2) = k^(-(3+s)/2)/√C, e o tempo para a incerteza
subir N oitavas a partir de k_L é Ω(N) = Σ_{n=0}^{N-1} τ(2^n k_L).
Para γ = (3+s)/2 > 0 a série é geométrica e converge para τ(k_L)/(1 - 2^(-γ)).
"""

import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.exceptions import InvalidWavenumber

logger = logging.getLogger(__name__)

# Inclinação de Kolmogorov
KOLMOGOROV_SLOPE = -5.0 / 3.0


class CascadeSpec(BaseModel):
    """
    Espectro E(k) = C·k^s, número de onda base k_L e número de oitavas N.
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"spectral_slope": -5 / 3, "k_L": 1.0, "levels": 30, "energy_constant": 1.0}
        },
    )

    spectral_slope: float = Field(KOLMOGOROV_SLOPE, description="Expoente s de E(k) ~ k^s")
    k_L: float = Field(1.0, gt=0, description="Número de onda base")
    levels: int = Field(30, ge=1, description="Número de oitavas N")
    energy_constant: float = Field(1.0, gt=0, description="Constante C de E(k) = C·k^s")

    @property
    def gamma(self) -> float:
        """γ = (3+s)/2: τ cai por 2^(-γ) a cada oitava."""
        return (3.0 + self.spectral_slope) / 2.0


@dataclass(frozen=True)
class Divergent:
    """Ω(N) cresce sem limite (γ ≤ 0)."""
    gamma: float

    def __str__(self) -> str:
        return "divergent"


def turnover_time(k: float, slope: float, energy_constant: float = 1.0) -> float:
    """
    τ(k) = k^(-(3+s)/2)/√C.

    Raises:
        InvalidWavenumber: k ≤ 0
    """
    if not k > 0:
        raise InvalidWavenumber(f"Número de onda deve ser positivo, recebido {k}")
    return k ** (-(3.0 + slope) / 2.0) / math.sqrt(energy_constant)


def _octave_taus(spec: CascadeSpec) -> np.ndarray:
    ks = spec.k_L * np.exp2(np.arange(spec.levels, dtype=np.float64))
    return ks ** (-spec.gamma) / math.sqrt(spec.energy_constant)


def omega_sum(spec: CascadeSpec) -> float:
    """Ω(N): soma parcial de τ sobre as oitavas n = 0..N-1."""
    return float(np.cumsum(_octave_taus(spec))[-1])


def omega_limit(spec: CascadeSpec) -> Union[float, Divergent]:
    """
    Ω(∞) = τ(k_L)/(1 - 2^(-γ)) se γ > 0, senão Divergent.
    """
    if spec.gamma <= 0:
        logger.debug(f"Série divergente para s={spec.spectral_slope} (γ={spec.gamma})")
        return Divergent(spec.gamma)
    tau_base = turnover_time(spec.k_L, spec.spectral_slope, spec.energy_constant)
    return tau_base / (1.0 - 2.0 ** (-spec.gamma))


def tail_bound(spec: CascadeSpec) -> float:
    """
    Cota geométrica |Ω(∞) - Ω(N)| ≤ τ(k_L)·2^(-γN)/(1 - 2^(-γ)); infinita se γ ≤ 0.
    """
    if spec.gamma <= 0:
        return math.inf
    tau_base = turnover_time(spec.k_L, spec.spectral_slope, spec.energy_constant)
    return tau_base * 2.0 ** (-spec.gamma * spec.levels) / (1.0 - 2.0 ** (-spec.gamma))


def octave_table(spec: CascadeSpec) -> pd.DataFrame:
    """
    Tabela por oitava com colunas n, k, tau, omega_partial.
    """
    taus = _octave_taus(spec)
    return pd.DataFrame({
        "n": np.arange(spec.levels),
        "k": spec.k_L * np.exp2(np.arange(spec.levels, dtype=np.float64)),
        "tau": taus,
        "omega_partial": np.cumsum(taus),
    })


__all__ = [
    "CascadeSpec",
    "Divergent",
    "KOLMOGOROV_SLOPE",
    "turnover_time",
    "omega_sum",
    "omega_limit",
    "tail_bound",
    "octave_table",
]
