"""
Expoentes diádicos q = k/2^n dos operadores i^q.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from src.config import settings
from src.exceptions import NonDyadicExponent

# i^4 é a identidade: expoentes são reduzidos módulo 4
PERIOD = 4

_POWER_LITERAL = re.compile(r"^\s*(-?\d+)\s*/\s*2\s*\^\s*(\d+)\s*$")

ExponentLike = Union["DyadicExponent", Fraction, int, str]


def _is_power_of_two(value: int) -> bool:
    return value > 0 and value & (value - 1) == 0


@dataclass(frozen=True)
class DyadicExponent:
    """
    Expoente q = numerator / 2^log2_denominator, em forma canônica e
    reduzido ao intervalo [0, 4).

    Forma canônica: numerador ímpar, ou zero com log2_denominator = 0.
    """
    numerator: int
    log2_denominator: int

    def __post_init__(self):
        if self.numerator < 0 or self.log2_denominator < 0:
            raise NonDyadicExponent(
                f"Expoente diádico deve ter termos não negativos: "
                f"{self.numerator}/2^{self.log2_denominator}"
            )
        if self.numerator == 0 and self.log2_denominator != 0:
            raise NonDyadicExponent("Zero deve ter log2_denominator = 0")
        if self.numerator != 0 and self.log2_denominator > 0 and self.numerator % 2 == 0:
            raise NonDyadicExponent(
                f"{self.numerator}/2^{self.log2_denominator} não está em termos mínimos"
            )
        if self.numerator >= PERIOD << self.log2_denominator:
            raise NonDyadicExponent(
                f"{self.numerator}/2^{self.log2_denominator} não está reduzido módulo 4"
            )

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "DyadicExponent":
        """
        Constrói a partir de um racional, reduzindo módulo 4.
        """
        value = Fraction(value)
        if not _is_power_of_two(value.denominator):
            raise NonDyadicExponent(
                f"{value} não é diádico: denominador {value.denominator} não é potência de 2"
            )
        reduced = value % PERIOD
        return cls(reduced.numerator, reduced.denominator.bit_length() - 1)

    @classmethod
    def parse(cls, literal: str) -> "DyadicExponent":
        """
        Interpreta literais `k/2^n`, `k/m` (m potência de 2), inteiros e
        decimais finitos.

        Examples:
            >>> DyadicExponent.parse("3/2^3")
            DyadicExponent(numerator=3, log2_denominator=3)
        """
        match = _POWER_LITERAL.match(literal)
        if match:
            numerator, power = int(match.group(1)), int(match.group(2))
            return cls.from_fraction(Fraction(numerator, 2 ** power))
        try:
            value = Fraction(literal.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise NonDyadicExponent(f"Literal de expoente inválido: {literal!r}") from e
        return cls.from_fraction(value)

    @classmethod
    def coerce(cls, value: ExponentLike) -> "DyadicExponent":
        if isinstance(value, DyadicExponent):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, float):
            raise NonDyadicExponent(
                "Use DyadicExponent.from_float para valores de ponto flutuante"
            )
        return cls.from_fraction(value)

    @classmethod
    def from_float(
        cls,
        value: float,
        max_log2_denominator: Optional[int] = None,
        tolerance: float = 1e-12
    ) -> "DyadicExponent":
        """
        Reconhece um float como racional diádico de denominador até
        2^max_log2_denominator.
        """
        if not math.isfinite(value):
            raise NonDyadicExponent(f"Expoente não finito: {value}")
        max_n = settings.MAX_LOG2_DENOMINATOR if max_log2_denominator is None else max_log2_denominator
        scale = 2 ** max_n
        candidate = Fraction(round(value * scale), scale)
        if abs(float(candidate) - value) > tolerance * max(1.0, abs(value)):
            raise NonDyadicExponent(
                f"{value!r} não é um racional diádico com denominador até 2^{max_n}"
            )
        return cls.from_fraction(candidate)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 2 ** self.log2_denominator)

    @property
    def longitude(self) -> float:
        """Longitude λ = πq/2 associada a i^q."""
        return math.pi * float(self.value) / 2

    @property
    def block_length(self) -> int:
        """Tamanho 2^(n+1) da tupla em que i^(1/2^n) atua."""
        return 2 ** (self.log2_denominator + 1)

    def is_identity(self) -> bool:
        return self.numerator == 0

    def __add__(self, other: ExponentLike) -> "DyadicExponent":
        other = DyadicExponent.coerce(other)
        return DyadicExponent.from_fraction(self.value + other.value)

    def __neg__(self) -> "DyadicExponent":
        return DyadicExponent.from_fraction(-self.value)

    def __str__(self) -> str:
        if self.log2_denominator == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.log2_denominator}"
