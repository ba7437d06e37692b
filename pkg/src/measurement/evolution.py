"""
Evolução unitária como rotação de longitude.

Um estado estacionário de frequência ω evolui de t0 a t pela rotação
λ ↦ λ + ω(t - t0), isto é, pelo operador i^q com q = (2ω/π)(t - t0).
"""

import math
from dataclasses import dataclass, field

from src.sequences.bitseq import BitSequence, apply_i_power
from src.sequences.dyadic import DyadicExponent


@dataclass(frozen=True)
class EvolutionSpec:
    """
    Taxa angular ω e intervalo [t0, t]; (2ω/π)(t - t0) precisa ser diádico.

    Raises:
        NonDyadicExponent: na construção, se o expoente não for diádico
    """
    omega: float
    t0: float
    t: float
    exponent: DyadicExponent = field(init=False, repr=False)

    def __post_init__(self):
        q = 2.0 * self.omega / math.pi * (self.t - self.t0)
        object.__setattr__(self, "exponent", DyadicExponent.from_float(q))

    @property
    def phase(self) -> float:
        """Avanço de longitude ω(t - t0)."""
        return self.omega * (self.t - self.t0)

    @classmethod
    def from_exponent(cls, q: DyadicExponent, t0: float = 0.0) -> "EvolutionSpec":
        """Evolução de duração unitária com ω = πq/2."""
        return cls(omega=q.longitude, t0=t0, t=t0 + 1.0)


def evolve(spec: EvolutionSpec, s: BitSequence) -> BitSequence:
    """
    i^q(s) com q = (2ω/π)(t - t0): avança a longitude e preserva as
    estatísticas de latitude.
    """
    return apply_i_power(spec.exponent, s)


__all__ = ["EvolutionSpec", "evolve"]
