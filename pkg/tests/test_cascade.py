"""
Testes da soma de previsibilidade por oitavas.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.cascade import (
    CascadeSpec,
    Divergent,
    octave_table,
    omega_limit,
    omega_sum,
    tail_bound,
    turnover_time,
)
from src.cascade.predictability import KOLMOGOROV_SLOPE
from src.exceptions import InvalidWavenumber


class TestTurnoverTime:
    """Testes de τ(k)."""

    @pytest.mark.parametrize("k,slope,expected", [
        (1.0, -5 / 3, 1.0),
        (8.0, -5 / 3, 0.25),
        (4.0, -3.0, 1.0),
    ])
    def test_examples(self, k, slope, expected):
        """Testa τ(k) em valores conhecidos."""
        assert turnover_time(k, slope) == pytest.approx(expected)

    def test_energy_constant(self):
        """Testa o efeito da constante de energia em τ."""
        assert turnover_time(1.0, KOLMOGOROV_SLOPE, energy_constant=4.0) == pytest.approx(0.5)

    @pytest.mark.parametrize("k", [0.0, -1.0])
    def test_invalid_wavenumber(self, k):
        """Testa que k ≤ 0 é recusado."""
        with pytest.raises(InvalidWavenumber):
            turnover_time(k, KOLMOGOROV_SLOPE)


class TestOmegaSum:
    """Testes das somas parciais Ω(N)."""

    def test_single_level(self):
        """Testa Ω com um único nível."""
        spec = CascadeSpec(levels=1, k_L=8.0)
        assert omega_sum(spec) == pytest.approx(turnover_time(8.0, KOLMOGOROV_SLOPE))

    def test_kolmogorov_thirty_levels(self):
        """Testa Ω(30) no espectro de Kolmogorov contra a soma geométrica."""
        assert omega_sum(CascadeSpec(levels=30)) == pytest.approx(2.7024, abs=1e-4)
        ratio = 2 ** (-2 / 3)
        assert omega_sum(CascadeSpec(levels=30)) == pytest.approx((1 - ratio ** 30) / (1 - ratio), abs=1e-12)

    def test_marginal_slope_diverges_linearly(self):
        """Testa o crescimento linear de Ω com inclinação -3."""
        assert omega_sum(CascadeSpec(spectral_slope=-3.0, levels=100)) == pytest.approx(100.0)

    @pytest.mark.parametrize("slope", [-5 / 3, -3.0, -4.0, -1.0])
    def test_monotone(self, slope):
        """Testa que Ω(N) não decresce com N."""
        sums = [omega_sum(CascadeSpec(spectral_slope=slope, levels=n)) for n in range(1, 40)]
        assert all(b >= a for a, b in zip(sums, sums[1:]))

    def test_spec_validation(self):
        """Testa a validação dos parâmetros da cascata."""
        with pytest.raises(ValidationError):
            CascadeSpec(k_L=0.0)
        with pytest.raises(ValidationError):
            CascadeSpec(levels=0)


class TestOmegaLimit:
    """Testes do limite Ω(∞)."""

    def test_kolmogorov(self):
        """Testa o limite de Ω no espectro de Kolmogorov."""
        spec = CascadeSpec()
        assert spec.gamma == pytest.approx(2 / 3)
        assert omega_limit(spec) == pytest.approx(2.7024, abs=1e-4)

    def test_divergent(self):
        """Testa o marcador de divergência para inclinação -3."""
        limit = omega_limit(CascadeSpec(spectral_slope=-3.0))
        assert isinstance(limit, Divergent)
        assert str(limit) == "divergent"
        assert math.isinf(tail_bound(CascadeSpec(spectral_slope=-3.0)))

    def test_unit_gamma(self):
        """Testa o limite com expoente unitário."""
        assert omega_limit(CascadeSpec(spectral_slope=-1.0)) == pytest.approx(2.0)

    @pytest.mark.parametrize("slope", [-5 / 3, -1.0, -2.5])
    @pytest.mark.parametrize("levels", [1, 5, 20])
    def test_tail_bound(self, slope, levels):
        """Testa que a cauda geométrica limita a diferença até o limite."""
        spec = CascadeSpec(spectral_slope=slope, levels=levels)
        assert abs(omega_limit(spec) - omega_sum(spec)) <= tail_bound(spec) + 1e-12

    def test_scaling_with_base_wavenumber(self):
        """Testa a escala do limite com o número de onda de base."""
        base = omega_limit(CascadeSpec(k_L=1.0))
        doubled = omega_limit(CascadeSpec(k_L=2.0))
        assert doubled == pytest.approx(base * 2 ** (-2 / 3), rel=1e-12)


class TestOctaveTable:
    """Testes da tabela por oitava."""

    def test_columns_and_final_row(self):
        """Testa as colunas e a última linha da tabela."""
        table = octave_table(CascadeSpec(levels=30))
        assert list(table.columns) == ["n", "k", "tau", "omega_partial"]
        assert len(table) == 30
        assert table["omega_partial"].iloc[-1] == pytest.approx(2.7024, abs=1e-4)
        np.testing.assert_allclose(table["k"], 2.0 ** np.arange(30))

    def test_partial_sums_match(self):
        """Testa que a última soma parcial coincide com Ω(N)."""
        spec = CascadeSpec(levels=12, spectral_slope=-2.0)
        table = octave_table(spec)
        assert table["omega_partial"].iloc[-1] == pytest.approx(omega_sum(spec))
        np.testing.assert_allclose(np.cumsum(table["tau"]), table["omega_partial"])
