"""
Testes do oráculo de Hilbert e da concordância com o modelo.
"""

import math

import pytest

from src.entanglement import EprSpec, correlation_estimate
from src.exceptions import UnnormalizedState
from src.geometry import SpherePoint
from src.measurement import born_estimate
from src.oracle import (
    StateVector2,
    evolve_state,
    prob_up,
    singlet_correlation,
    singlet_joint_probabilities,
    state_from_point,
)


class TestStateFromPoint:
    """Testes das amplitudes de um ponto da esfera."""

    def test_north_pole(self):
        """Testa as amplitudes no polo norte."""
        state = state_from_point(SpherePoint.from_colatitude(0.0))
        assert state.amp_up == (1.0, 0.0)
        assert state.amp_down == (0.0, 0.0)

    def test_equator(self):
        """Testa as amplitudes no equador."""
        state = state_from_point(SpherePoint.from_colatitude(math.pi / 2))
        assert state.amp_up[0] == pytest.approx(math.sqrt(2) / 2)
        assert state.amp_down[0] == pytest.approx(math.sqrt(2) / 2)

    def test_south_pole(self):
        """Testa as amplitudes no polo sul."""
        state = state_from_point(SpherePoint.from_colatitude(math.pi))
        assert state.amp_up[0] == pytest.approx(0.0, abs=1e-15)
        assert state.amp_down[0] == pytest.approx(1.0)

    def test_normalized(self):
        """Testa a normalização do estado."""
        assert state_from_point(SpherePoint(theta=0.3, lam=2.1)).is_normalized()


class TestProbUp:
    """Testes da probabilidade de Born."""

    @pytest.mark.parametrize("theta,expected", [
        (math.pi / 2, 1.0),
        (0.0, 0.5),
        (math.pi / 6, 0.75),
    ])
    def test_examples(self, theta, expected):
        """Testa prob_up em latitudes conhecidas."""
        assert prob_up(state_from_point(SpherePoint(theta=theta))) == pytest.approx(expected)

    def test_independent_of_longitude(self):
        """Testa que prob_up não depende da longitude."""
        values = [prob_up(state_from_point(SpherePoint(theta=0.4, lam=lam))) for lam in (0.0, 1.0, 2.5, 4.0)]
        assert max(values) - min(values) < 1e-15

    def test_unnormalized(self):
        """Testa estado não normalizado."""
        with pytest.raises(UnnormalizedState):
            prob_up(StateVector2(amp_up=(1.0, 0.0), amp_down=(1.0, 0.0)))

    def test_evolution_keeps_probability(self):
        """Testa que a fase não altera prob_up."""
        state = state_from_point(SpherePoint(theta=0.2, lam=0.5))
        evolved = evolve_state(state, 1.1)
        assert prob_up(evolved) == pytest.approx(prob_up(state), abs=1e-15)
        expected = state_from_point(SpherePoint(theta=0.2, lam=1.6))
        assert evolved.amp_down == pytest.approx(expected.amp_down)

    @pytest.mark.parametrize("theta", [-math.pi / 3, 0.0, math.pi / 6, math.pi / 4])
    def test_agrees_with_model(self, theta, seed):
        """Testa a concordância com a estimativa de Monte Carlo."""
        report = born_estimate(theta, 20_000, seed)
        assert report.within(prob_up(state_from_point(SpherePoint(theta=theta))))


class TestSinglet:
    """Testes das correlações do singleto."""

    @pytest.mark.parametrize("delta,expected", [
        (0.0, -1.0),
        (math.pi / 2, 0.0),
        (math.pi / 3, -0.5),
    ])
    def test_correlation(self, delta, expected):
        """Testa a correlação do singleto."""
        assert singlet_correlation(delta) == pytest.approx(expected, abs=1e-15)

    def test_out_of_range(self):
        """Testa Δθ fora de [0, π]."""
        with pytest.raises(ValueError):
            singlet_correlation(-0.1)

    def test_joint_probabilities(self):
        """Testa as probabilidades conjuntas."""
        joint = singlet_joint_probabilities(math.pi / 3)
        assert sum(joint.values()) == pytest.approx(1.0)
        correlation = joint["++"] + joint["--"] - joint["+-"] - joint["-+"]
        assert correlation == pytest.approx(singlet_correlation(math.pi / 3))

    @pytest.mark.parametrize("delta", [0.4, 1.3, 2.6])
    def test_agrees_with_model(self, delta, seed):
        """Testa a concordância com a correlação de Monte Carlo."""
        report = correlation_estimate(EprSpec(delta_theta=delta, trials=20_000, seed=seed))
        assert report.within(singlet_correlation(delta))
