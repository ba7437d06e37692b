"""
Sequências bivalentes e a álgebra dos operadores i^q.

Os elementos são guardados como bits empacotados (+1 ↔ bit 1), na ordem dos
elementos. Todos os operadores são funções puras sobre valores imutáveis.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

from src.exceptions import EmptyInput, InvalidDigit, LengthNotAligned
from src.sequences.dyadic import DyadicExponent, ExponentLike
from src.utils.streams import ExperimentTag, stream_sequence_bits

logger = logging.getLogger(__name__)


class BitSequence:
    """
    Prefixo finito de uma sequência infinita de elementos ±1.
    """

    __slots__ = ("_packed", "_length")

    def __init__(self, packed: bytes, length: int):
        if length < 1:
            raise EmptyInput("Uma sequência bivalente precisa de ao menos um elemento")
        expected = -(-length // 8)
        if len(packed) != expected:
            raise ValueError(
                f"{len(packed)} bytes não correspondem a {length} elementos"
            )
        self._packed = bytes(packed)
        self._length = length

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitSequence":
        """
        Constrói a partir de dígitos 0/1 (0 ↦ -1, 1 ↦ +1).
        """
        array = np.asarray(bits if isinstance(bits, np.ndarray) else list(bits))
        if array.size == 0:
            raise EmptyInput("Lista de dígitos vazia")
        if array.ndim != 1:
            raise ValueError("Dígitos devem formar um vetor unidimensional")
        if not np.isin(array, (0, 1)).all():
            raise InvalidDigit("Dígitos binários devem ser 0 ou 1")
        packed = np.packbits(array.astype(np.uint8), bitorder='little')
        return cls(packed.tobytes(), int(array.size))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "BitSequence":
        """
        Constrói a partir de elementos ±1.
        """
        array = np.asarray(values if isinstance(values, np.ndarray) else list(values))
        if array.size and not np.isin(array, (1, -1)).all():
            raise InvalidDigit("Elementos devem ser +1 ou -1")
        return cls.from_bits((array > 0).astype(np.uint8))

    @classmethod
    def constant(cls, length: int, value: int = 1) -> "BitSequence":
        if value not in (1, -1):
            raise InvalidDigit("Elementos devem ser +1 ou -1")
        return cls.from_bits(np.full(length, 1 if value == 1 else 0, dtype=np.uint8))

    @property
    def length(self) -> int:
        return self._length

    @property
    def packed(self) -> bytes:
        return self._packed

    @property
    def max_root_order(self) -> Optional[int]:
        """
        Maior n tal que i^(1/2^n) se aplica (comprimento múltiplo de 2^(n+1)).
        """
        trailing = (self._length & -self._length).bit_length() - 1
        return trailing - 1 if trailing >= 1 else None

    def bits(self) -> np.ndarray:
        """Dígitos 0/1 como uint8."""
        raw = np.frombuffer(self._packed, dtype=np.uint8)
        return np.unpackbits(raw, count=self._length, bitorder='little')

    def values(self) -> np.ndarray:
        """Elementos ±1 como int8."""
        return self.bits().astype(np.int8) * 2 - 1

    def count_ones(self) -> int:
        return int(np.count_nonzero(self.bits()))

    def __len__(self) -> int:
        return self._length

    def __getitem__(self, index: int) -> int:
        if isinstance(index, slice):
            return BitSequence.from_bits(self.bits()[index])
        if index < 0:
            index += self._length
        if not 0 <= index < self._length:
            raise IndexError("Índice fora da sequência")
        byte = self._packed[index >> 3]
        return 1 if (byte >> (index & 7)) & 1 else -1

    def __iter__(self) -> Iterator[int]:
        return iter(self.values().tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitSequence):
            return NotImplemented
        return self._length == other._length and self._packed == other._packed

    def __hash__(self) -> int:
        return hash((self._length, self._packed))

    def __repr__(self) -> str:
        head = ", ".join("+1" if v > 0 else "-1" for v in self.values()[:8].tolist())
        suffix = ", ..." if self._length > 8 else ""
        return f"BitSequence(length={self._length}, elements=[{head}{suffix}])"


@dataclass(frozen=True)
class SequenceStats:
    """
    Média e variância populacional de uma sequência ±1.
    """
    mean: float
    variance: float
    count: int

    @property
    def std(self) -> float:
        return float(np.sqrt(self.variance))


class PrefixInterval(NamedTuple):
    """Intervalo [lo, hi) que contém o real de qualquer extensão infinita."""
    lo: Fraction
    hi: Fraction


# ============================================================
# Permutações com sinal por tupla
# ============================================================

class SignedPermutation(NamedTuple):
    """
    out[j] = x[source[j]] XOR flip[j], no domínio dos bits (negar = inverter o bit).
    """
    source: np.ndarray
    flip: np.ndarray

    def then(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composição: aplica self e depois other."""
        return SignedPermutation(
            self.source[other.source],
            self.flip[other.source] ^ other.flip,
        )

    def apply(self, rows: np.ndarray) -> np.ndarray:
        """Aplica a cada linha de uma matriz (linhas, tamanho da tupla)."""
        return rows[:, self.source] ^ self.flip


def _identity_permutation(size: int) -> SignedPermutation:
    return SignedPermutation(np.arange(size), np.zeros(size, dtype=np.uint8))


@lru_cache(maxsize=None)
def root_permutation(n: int) -> SignedPermutation:
    """
    Permutação com sinal de i^(1/2^n) sobre uma tupla de 2^(n+1) elementos.

    A tupla é dividida em β_(n+1) (primeiros 2^n), β_n (2^(n-1) seguintes),
    ..., β_2 (2 elementos) e β_1 = {-a_M, a_(M-1)}; a saída é β_1, β_2, ..., β_(n+1).
    """
    if n < 0:
        raise ValueError("A ordem da raiz deve ser não negativa")
    size = 2 ** (n + 1)
    blocks = {}
    start = 0
    for m in range(n + 1, 1, -1):
        width = 2 ** (m - 1)
        blocks[m] = list(range(start, start + width))
        start += width

    order = [size - 1, size - 2]
    for m in range(2, n + 2):
        order.extend(blocks[m])

    flip = np.zeros(size, dtype=np.uint8)
    flip[0] = 1
    source = np.asarray(order, dtype=np.intp)
    source.setflags(write=False)
    flip.setflags(write=False)
    return SignedPermutation(source, flip)


@lru_cache(maxsize=256)
def power_permutation(n: int, k: int) -> SignedPermutation:
    """
    (i^(1/2^n))^k por quadrados sucessivos; as potências comutam entre si.
    """
    result = _identity_permutation(2 ** (n + 1))
    base = root_permutation(n)
    while k:
        if k & 1:
            result = result.then(base)
        base = base.then(base)
        k >>= 1
    return result


def _require_alignment(s: BitSequence, block: int) -> None:
    if s.length % block:
        raise LengthNotAligned(s.length, block)


def _permute(s: BitSequence, permutation: SignedPermutation) -> BitSequence:
    block = len(permutation.source)
    _require_alignment(s, block)
    rows = s.bits().reshape(-1, block)
    return BitSequence.from_bits(permutation.apply(rows).ravel())


# ============================================================
# Operações
# ============================================================

def from_real_bits(bits: Sequence[int]) -> BitSequence:
    """
    Substitui cada dígito 0 da expansão binária por -1 (e 1 por +1).

    Raises:
        EmptyInput: lista vazia
        InvalidDigit: dígito fora de {0, 1}
    """
    return BitSequence.from_bits(bits)


def random_sequence(
    length: int,
    seed: int,
    tag: int = ExperimentTag.GENERATE
) -> BitSequence:
    """
    Sequência genérica semeada, tirada do fluxo Philox de (seed, tag).
    """
    return BitSequence.from_bits(stream_sequence_bits(seed, tag, length))


def prefix_real(s: BitSequence) -> PrefixInterval:
    """
    Intervalo do real r cuja expansão binária começa com o prefixo s.
    """
    raw = np.packbits(s.bits(), bitorder='big').tobytes()
    pad = 8 * len(raw) - s.length
    numerator = int.from_bytes(raw, 'big') >> pad
    scale = 2 ** s.length
    return PrefixInterval(Fraction(numerator, scale), Fraction(numerator + 1, scale))


def negate(s: BitSequence) -> BitSequence:
    """Inverte o sinal de cada elemento (ponto antípoda, r ↦ 1 - r)."""
    return BitSequence.from_bits(s.bits() ^ 1)


def apply_i(s: BitSequence) -> BitSequence:
    """
    Operador i: cada par (a_(2k-1), a_(2k)) ↦ (-a_(2k), a_(2k-1)).

    Raises:
        LengthNotAligned: comprimento ímpar
    """
    return _permute(s, root_permutation(0))


def apply_i_root(n: int, s: BitSequence) -> BitSequence:
    """
    Operador i^(1/2^n) aplicado a cada 2^(n+1)-tupla consecutiva.

    Raises:
        LengthNotAligned: comprimento não múltiplo de 2^(n+1)
    """
    return _permute(s, root_permutation(n))


def apply_i_power(q: ExponentLike, s: BitSequence) -> BitSequence:
    """
    Operador i^q para q = k/2^n diádico (reduzido módulo 4).

    Igual a i^(1/2^n) composto k vezes.
    """
    q = DyadicExponent.coerce(q)
    if q.is_identity():
        return s
    return _permute(s, power_permutation(q.log2_denominator, q.numerator))


def induced_real(q: ExponentLike, s: BitSequence) -> PrefixInterval:
    """Transformação induzida em r: prefix_real(i^q(s))."""
    return prefix_real(apply_i_power(q, s))


def stats(s: BitSequence) -> SequenceStats:
    """
    Média e variância populacional; para dados ±1, variância = 1 - média².
    """
    ones = s.count_ones()
    mean = (2 * ones - s.length) / s.length
    return SequenceStats(mean=mean, variance=1.0 - mean * mean, count=s.length)


def root_rows(n: int, rows: np.ndarray) -> np.ndarray:
    """
    i^(1/2^n) aplicado a cada linha de bits de uma matriz de tentativas.
    """
    block = 2 ** (n + 1)
    count, width = rows.shape
    if width % block:
        raise LengthNotAligned(width, block)
    permuted = root_permutation(n).apply(rows.reshape(-1, block))
    return permuted.reshape(count, width)


__all__ = [
    "BitSequence",
    "SequenceStats",
    "PrefixInterval",
    "SignedPermutation",
    "root_permutation",
    "power_permutation",
    "from_real_bits",
    "random_sequence",
    "prefix_real",
    "negate",
    "apply_i",
    "apply_i_root",
    "apply_i_power",
    "induced_real",
    "stats",
    "root_rows",
]
