"""
Identidade de incerteza: σ_θ̃·σ_λ = |cos θ̃′| com cos θ̃′ = sin θ̃·sin λ.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from src.geometry.sphere import SpherePoint, colatitude_between
from src.measurement.criterion import sample_latitude_outcomes
from src.reports.schemas import StatReport, UncertaintyReport
from src.utils.streams import ExperimentTag

logger = logging.getLogger(__name__)

EQUATOR_AXIS = SpherePoint(theta=0.0, lam=math.pi / 2)


def uncertainty_trig(colat: float, lon: float) -> Tuple[float, float]:
    """
    Forma trigonométrica exata.

    Args:
        colat: Co-latitude θ̃ em [0, π]
        lon: Longitude λ

    Returns:
        (cos θ̃′, θ̃′) com cos θ̃′ = sin θ̃·sin λ; θ̃′ é o ângulo central até
        o ponto do equador na longitude π/2
    """
    cosine = math.sin(colat) * math.sin(lon)
    angle = colatitude_between(SpherePoint.from_colatitude(colat, lon), EQUATOR_AXIS)
    return cosine, angle


def fold_longitude(lon: float) -> float:
    """Reduz λ a [0, π] preservando |sin λ|."""
    lon = math.fmod(lon, 2 * math.pi)
    if lon < 0:
        lon += 2 * math.pi
    return 2 * math.pi - lon if lon > math.pi else lon


def _std_report(
    op: str,
    latitude: float,
    trials: int,
    seed: int,
    tag: ExperimentTag,
    window_bits: Optional[int],
    n_jobs: Optional[int],
) -> StatReport:
    """
    Desvio padrão dos resultados ±1 na latitude dada; pelo método delta,
    o erro padrão de σ = √(1 - μ²) é |μ|/√n.
    """
    bits = sample_latitude_outcomes(latitude, trials, seed, tag, window_bits, n_jobs)
    mean = float(2.0 * bits.mean() - 1.0)
    return StatReport(
        op=op,
        estimate=math.sqrt(max(0.0, 1.0 - mean * mean)),
        std_error=abs(mean) / math.sqrt(trials),
        samples=trials,
        seed=seed,
        params={"latitude": latitude},
    )


def uncertainty_mc(
    colat: float,
    lon: float,
    trials: int,
    seed: int,
    window_bits: Optional[int] = None,
    n_jobs: Optional[int] = None
) -> UncertaintyReport:
    """
    Estimativa de Monte Carlo de (σ_θ̃, σ_λ, μ_θ̃′).

    σ_θ̃ é o desvio da saída de j na latitude π/2 - θ̃, σ_λ o desvio na
    latitude π/2 - λ (λ reduzido a [0, π]) e μ_θ̃′ a média na latitude
    π/2 - θ̃′. Cada estimativa usa um fluxo independente.
    """
    if trials < 1:
        raise ValueError("trials deve ser positivo")
    folded = fold_longitude(lon)
    _, rotated_colat = uncertainty_trig(colat, lon)

    sigma_colat = _std_report(
        "uncertainty_sigma_colatitude", math.pi / 2 - colat, trials, seed,
        ExperimentTag.UNCERTAINTY_COLATITUDE, window_bits, n_jobs,
    )
    sigma_lon = _std_report(
        "uncertainty_sigma_longitude", math.pi / 2 - folded, trials, seed,
        ExperimentTag.UNCERTAINTY_LONGITUDE, window_bits, n_jobs,
    )
    rotated_bits = sample_latitude_outcomes(
        math.pi / 2 - rotated_colat, trials, seed,
        ExperimentTag.UNCERTAINTY_ROTATED, window_bits, n_jobs,
    )
    mu_rotated = StatReport.from_values(
        "uncertainty_mu_rotated",
        rotated_bits.astype(np.int8) * 2 - 1,
        seed,
        {"latitude": math.pi / 2 - rotated_colat},
    )

    product = sigma_colat.estimate * sigma_lon.estimate
    product_se = math.hypot(
        sigma_lon.estimate * sigma_colat.std_error,
        sigma_colat.estimate * sigma_lon.std_error,
    )
    report = UncertaintyReport(
        sigma_colatitude=sigma_colat,
        sigma_longitude=sigma_lon,
        mu_rotated=mu_rotated,
        product=product,
        abs_mu=abs(mu_rotated.estimate),
        product_std_error=product_se,
        difference_std_error=math.hypot(product_se, mu_rotated.std_error),
    )
    logger.info(
        f"Incerteza θ̃={colat:.6f}, λ={lon:.6f}: σσ={product:.6f}, "
        f"|μ|={report.abs_mu:.6f} ± {report.difference_std_error:.6f}"
    )
    return report


__all__ = ["uncertainty_trig", "uncertainty_mc", "fold_longitude"]
