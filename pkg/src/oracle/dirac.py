"""
Referência fechada no espaço de Hilbert de dois níveis.

|ψ⟩ = cos(θ̃/2)|↑⟩ + e^{iλ} sin(θ̃/2)|↓⟩, com amplitudes guardadas como pares reais.
"""

import math
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.config import settings
from src.exceptions import UnnormalizedState
from src.geometry.sphere import SpherePoint

Amplitude = Tuple[float, float]


class StateVector2(BaseModel):
    """
    Vetor de estado (amp_up, amp_down), cada amplitude como (re, im).
    """
    model_config = ConfigDict(frozen=True)

    amp_up: Amplitude = Field(..., description="Amplitude de |↑⟩ como (re, im)")
    amp_down: Amplitude = Field(..., description="Amplitude de |↓⟩ como (re, im)")

    @property
    def norm_squared(self) -> float:
        return (
            self.amp_up[0] ** 2 + self.amp_up[1] ** 2
            + self.amp_down[0] ** 2 + self.amp_down[1] ** 2
        )

    def is_normalized(self, tolerance: Optional[float] = None) -> bool:
        tolerance = settings.STATE_TOLERANCE if tolerance is None else tolerance
        return abs(self.norm_squared - 1.0) <= tolerance


def state_from_point(p: SpherePoint) -> StateVector2:
    """
    Estado do ponto (θ, λ): amp_up = (cos(θ̃/2), 0),
    amp_down = (cos λ·sin(θ̃/2), sin λ·sin(θ̃/2)).
    """
    half = p.colatitude / 2
    return StateVector2(
        amp_up=(math.cos(half), 0.0),
        amp_down=(math.cos(p.lam) * math.sin(half), math.sin(p.lam) * math.sin(half)),
    )


def prob_up(v: StateVector2) -> float:
    """
    Probabilidade de Born |amp_up|²; igual a (1 + sin θ)/2 para state_from_point.

    Raises:
        UnnormalizedState: se |‖v‖² - 1| > NORM_TOLERANCE
    """
    if abs(v.norm_squared - 1.0) > settings.NORM_TOLERANCE:
        raise UnnormalizedState(f"Norma ao quadrado {v.norm_squared:.12f} ≠ 1")
    return v.amp_up[0] ** 2 + v.amp_up[1] ** 2


def evolve_state(v: StateVector2, phase: float) -> StateVector2:
    """
    Evolução estacionária: multiplica amp_down por e^{iφ} (λ ↦ λ + φ).
    """
    re, im = v.amp_down
    c, s = math.cos(phase), math.sin(phase)
    return StateVector2(amp_up=v.amp_up, amp_down=(re * c - im * s, re * s + im * c))


def singlet_correlation(delta_theta: float) -> float:
    """⟨σ_a ⊗ σ_b⟩ no singleto: -cos Δθ."""
    if not 0.0 <= delta_theta <= math.pi:
        raise ValueError(f"Δθ fora de [0, π]: {delta_theta}")
    return -math.cos(delta_theta)


def singlet_joint_probabilities(delta_theta: float) -> Dict[str, float]:
    """
    Probabilidades conjuntas dos resultados (o, o′) no singleto.

    P(o′ = -o) = cos²(Δθ/2), dividida igualmente entre (+,-) e (-,+).
    """
    anti = math.cos(delta_theta / 2) ** 2
    return {
        "++": (1 - anti) / 2,
        "+-": anti / 2,
        "-+": anti / 2,
        "--": (1 - anti) / 2,
    }


__all__ = [
    "StateVector2",
    "state_from_point",
    "prob_up",
    "evolve_state",
    "singlet_correlation",
    "singlet_joint_probabilities",
]
