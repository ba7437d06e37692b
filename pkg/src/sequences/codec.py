"""
Formato de arquivo BSQ1 para sequências bivalentes.

Layout:
    8 bytes   magic b"BIVSEQ1\\n"
    8 bytes   número de elementos (uint64 little-endian)
    ceil(N/8) elementos empacotados, bit menos significativo primeiro,
              bit 1 ↔ +1, bits de preenchimento em zero
"""

import logging
import struct
from pathlib import Path
from typing import Union

from src.exceptions import SequenceFormatError
from src.sequences.bitseq import BitSequence
from src.utils.io import atomic_write_bytes
from src.utils.logging import StructuredLogger

logger = logging.getLogger(__name__)
io_logger = StructuredLogger(__name__)

MAGIC = b"BIVSEQ1\n"
HEADER = struct.Struct("<8sQ")


def encode(s: BitSequence) -> bytes:
    """Serializa a sequência no formato BSQ1."""
    return HEADER.pack(MAGIC, s.length) + s.packed


def decode(data: bytes) -> BitSequence:
    """
    Lê uma sequência BSQ1.

    Raises:
        SequenceFormatError: magic errado, tamanho inconsistente, contagem
            zero ou bits de preenchimento diferentes de zero
    """
    if len(data) < HEADER.size:
        raise SequenceFormatError(
            f"Arquivo truncado: {len(data)} bytes, cabeçalho exige {HEADER.size}"
        )
    magic, count = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise SequenceFormatError(f"Magic inválido: {magic!r}")
    if count == 0:
        raise SequenceFormatError("Sequência com zero elementos")

    payload = data[HEADER.size:]
    expected = -(-count // 8)
    if len(payload) < expected:
        raise SequenceFormatError(
            f"Dados truncados: {len(payload)} bytes para {count} elementos"
        )
    if len(payload) > expected:
        raise SequenceFormatError(
            f"{len(payload) - expected} bytes excedentes após os elementos"
        )

    pad = 8 * expected - count
    if pad and payload[-1] >> (8 - pad):
        raise SequenceFormatError("Bits de preenchimento diferentes de zero")

    return BitSequence(payload, count)


def write_sequence(path: Union[str, Path], s: BitSequence) -> None:
    """Grava a sequência em BSQ1 de forma atômica."""
    atomic_write_bytes(path, encode(s))
    io_logger.log_sequence_io(str(path), s.length, "write")


def read_sequence(path: Union[str, Path]) -> BitSequence:
    """Lê uma sequência BSQ1 do disco."""
    data = Path(path).read_bytes()
    try:
        s = decode(data)
    except SequenceFormatError as e:
        io_logger.log_sequence_io(str(path), 0, "read", success=False, error_message=str(e))
        raise
    io_logger.log_sequence_io(str(path), s.length, "read")
    return s


__all__ = [
    "MAGIC",
    "encode",
    "decode",
    "write_sequence",
    "read_sequence",
]
