"""
Coordenadas na esfera, rotação de polo e a grade de pontos computáveis.

Convenções:
    - latitude θ em [-π/2, π/2], longitude λ em [0, 2π), co-latitude θ̃ = π/2 - θ
    - a grade de N meridianos tem λ = 2πn/N (n = 1..N) e θ = ±πm/2N (m = 0..N)
    - nas funções de grade, `rotation` é a inclinação do polo: o novo polo fica
      na latitude π/2 - rotation e longitude 0 (rotation = 0 é a identidade)
"""

import logging
import math
from typing import Iterator, List, NamedTuple, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.spatial.transform import Rotation

from src.config import settings

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class SpherePoint(BaseModel):
    """
    Ponto (latitude, longitude) na esfera unitária, em radianos.
    """
    model_config = ConfigDict(frozen=True)

    theta: float = Field(..., ge=-math.pi / 2, le=math.pi / 2, description="Latitude θ")
    lam: float = Field(0.0, description="Longitude λ, normalizada para [0, 2π)")

    @field_validator('lam')
    @classmethod
    def normalize_longitude(cls, v: float) -> float:
        v = math.fmod(v, TWO_PI)
        if v < 0:
            v += TWO_PI
        # fmod de valores negativos minúsculos pode arredondar para 2π
        return 0.0 if v >= TWO_PI else v

    @classmethod
    def from_colatitude(cls, colatitude: float, lam: float = 0.0) -> "SpherePoint":
        return cls(theta=math.pi / 2 - colatitude, lam=lam)

    @property
    def colatitude(self) -> float:
        return math.pi / 2 - self.theta

    def to_cartesian(self) -> np.ndarray:
        cos_theta = math.cos(self.theta)
        return np.array([
            cos_theta * math.cos(self.lam),
            cos_theta * math.sin(self.lam),
            math.sin(self.theta),
        ])

    def antipode(self) -> "SpherePoint":
        return SpherePoint(theta=-self.theta, lam=self.lam + math.pi)


class GridSpec(BaseModel):
    """
    Grade de N meridianos e 2N+1 círculos de latitude.
    """
    model_config = ConfigDict(frozen=True)

    N: int = Field(..., ge=1, description="Número de meridianos")

    def meridians(self) -> np.ndarray:
        """λ = 2πn/N para n = 1..N."""
        return TWO_PI * np.arange(1, self.N + 1) / self.N

    def latitude_sines(self) -> np.ndarray:
        """sin(πm′/2N) para m′ = -N..N."""
        return np.sin(np.pi * np.arange(-self.N, self.N + 1) / (2 * self.N))

    @property
    def point_count(self) -> int:
        """Entradas (m, n, hemisfério) da grade, com m = 0 contado uma vez."""
        return self.N * (2 * self.N + 1)


class GridPoint(NamedTuple):
    """Entrada da grade: índice de latitude com sinal e índice de meridiano."""
    m: int
    n: int

    def to_point(self, spec: GridSpec) -> SpherePoint:
        return SpherePoint(
            theta=math.pi * self.m / (2 * spec.N),
            lam=TWO_PI * self.n / spec.N,
        )


def iter_grid(spec: GridSpec) -> Iterator[GridPoint]:
    """Percorre as N(2N+1) entradas da grade (m com sinal, de -N a N)."""
    for m in range(-spec.N, spec.N + 1):
        for n in range(1, spec.N + 1):
            yield GridPoint(m, n)


def rotate_latitude(
    m: int,
    n: int,
    spec: GridSpec,
    theta0: float,
    lambda0: float = 0.0
) -> Tuple[float, float]:
    """
    Latitudes θ′ do ponto de grade (±πm/2N, 2πn/N) relativas a um polo
    transformado na latitude theta0.

    Com λ0 = 0:
        sin θ′ = cos(πm/2N)·cos(2πn/N)·cos θ0 ± sin(πm/2N)·sin θ0

    Para λ0 ≠ 0 a longitude do ponto é pré-rotacionada por -λ0.

    Returns:
        (θ′ da raiz +, θ′ da raiz -); a raiz + corresponde ao ponto do
        hemisfério norte (+πm/2N) e a raiz - ao do hemisfério sul
    """
    if not 0 <= m <= spec.N or not 1 <= n <= spec.N:
        raise ValueError(f"Índices fora da grade: m={m}, n={n}, N={spec.N}")
    lat = math.pi * m / (2 * spec.N)
    lam = TWO_PI * n / spec.N - lambda0
    meridian_term = math.cos(lat) * math.cos(lam) * math.cos(theta0)
    polar_term = math.sin(lat) * math.sin(theta0)
    roots = []
    for sine in (meridian_term + polar_term, meridian_term - polar_term):
        roots.append(math.asin(max(-1.0, min(1.0, sine))))
    return roots[0], roots[1]


def _rotated_sines(spec: GridSpec, rotation: float) -> np.ndarray:
    """sin θ′ de todas as entradas, na ordem de iter_grid."""
    theta0 = math.pi / 2 - rotation
    ms = np.repeat(np.arange(-spec.N, spec.N + 1), spec.N)
    lams = np.tile(spec.meridians(), 2 * spec.N + 1)
    lats = np.pi * ms / (2 * spec.N)
    sines = np.cos(lats) * np.cos(lams) * math.cos(theta0) + np.sin(lats) * math.sin(theta0)
    return sines


def _matches_grid(sines: np.ndarray, spec: GridSpec, tolerance: float) -> np.ndarray:
    targets = spec.latitude_sines()
    distance = np.abs(sines[:, None] - targets[None, :]).min(axis=1)
    return distance <= tolerance


def overlap_points(
    spec: GridSpec,
    rotation: float,
    tolerance: Optional[float] = None
) -> List[GridPoint]:
    """
    Pontos da grade original cuja latitude no sistema rotacionado também
    pertence à grade (pontos duplamente computáveis).
    """
    tolerance = settings.LATITUDE_TOLERANCE if tolerance is None else tolerance
    sines = _rotated_sines(spec, rotation)
    mask = _matches_grid(sines, spec, tolerance)
    return [point for point, keep in zip(iter_grid(spec), mask) if keep]


def grid_overlap_count(spec: GridSpec, rotation: float, tolerance: Optional[float] = None) -> int:
    """
    Número de pontos da grade cuja latitude rotacionada θ′ é igual a
    ±πm′/2N para algum m′.

    rotation = 0 devolve todos os N(2N+1) pontos; para rotações genéricas
    só sobrevivem os pontos sobre o eixo de rotação.
    """
    count = len(overlap_points(spec, rotation, tolerance))
    logger.debug(f"Grade N={spec.N}, rotação {rotation:.6f}: {count} coincidências")
    return count


def grid_overlap_bruteforce(spec: GridSpec, rotation: float, tolerance: Optional[float] = None) -> int:
    """
    Contagem independente: gira os vetores cartesianos da grade e lê a
    latitude no novo sistema.
    """
    tolerance = settings.LATITUDE_TOLERANCE if tolerance is None else tolerance
    frame = Rotation.from_euler('y', rotation)
    points = list(iter_grid(spec))
    vectors = np.array([p.to_point(spec).to_cartesian() for p in points])
    rotated = frame.inv().apply(vectors)
    mask = _matches_grid(rotated[:, 2], spec, tolerance)
    return int(np.count_nonzero(mask))


def colatitude_between(p: SpherePoint, q: SpherePoint) -> float:
    """
    Ângulo central entre p e q, em [0, π] (fórmula de Vincenty para a esfera).
    """
    delta = q.lam - p.lam
    cos_p, sin_p = math.cos(p.theta), math.sin(p.theta)
    cos_q, sin_q = math.cos(q.theta), math.sin(q.theta)
    y = math.hypot(cos_q * math.sin(delta), cos_p * sin_q - sin_p * cos_q * math.cos(delta))
    x = sin_p * sin_q + cos_p * cos_q * math.cos(delta)
    return math.atan2(y, x)


__all__ = [
    "SpherePoint",
    "GridSpec",
    "GridPoint",
    "iter_grid",
    "rotate_latitude",
    "grid_overlap_count",
    "overlap_points",
    "grid_overlap_bruteforce",
    "colatitude_between",
]
