"""
Testes do formato BSQ1.
"""

import struct

import pytest

from src.exceptions import SequenceFormatError
from src.sequences import BitSequence, decode, encode, read_sequence, write_sequence
from src.sequences.codec import MAGIC


class TestEncoding:
    """Testes do layout em bytes."""

    def test_layout(self):
        """Testa cabeçalho, ordem dos bits e preenchimento."""
        s = BitSequence.from_values([1, -1, 1, 1, -1, -1, -1, -1, 1])
        data = encode(s)
        assert data[:8] == MAGIC
        assert struct.unpack("<Q", data[8:16])[0] == 9
        assert data[16:] == bytes([0b00001101, 0b00000001])

    def test_decode_restores_sequence(self, generic_sequence):
        """Testa que decode desfaz encode."""
        assert decode(encode(generic_sequence)) == generic_sequence


class TestDecodingErrors:
    """Testes de arquivos malformados."""

    def _valid(self) -> bytes:
        return encode(BitSequence.from_values([1, -1, 1]))

    def test_truncated_header(self):
        """Testa cabeçalho truncado."""
        with pytest.raises(SequenceFormatError):
            decode(MAGIC)

    def test_bad_magic(self):
        """Testa assinatura inválida."""
        with pytest.raises(SequenceFormatError):
            decode(b"NOTBSQ1\n" + self._valid()[8:])

    def test_zero_count(self):
        """Testa contagem de elementos zero."""
        with pytest.raises(SequenceFormatError):
            decode(MAGIC + struct.pack("<Q", 0))

    def test_truncated_payload(self):
        """Testa dados truncados."""
        data = MAGIC + struct.pack("<Q", 20) + b"\xff"
        with pytest.raises(SequenceFormatError):
            decode(data)

    def test_trailing_bytes(self):
        """Testa bytes sobrando no fim."""
        with pytest.raises(SequenceFormatError):
            decode(self._valid() + b"\x00")

    def test_nonzero_padding(self):
        """Testa bits de preenchimento diferentes de zero."""
        data = MAGIC + struct.pack("<Q", 3) + bytes([0b11111101])
        with pytest.raises(SequenceFormatError):
            decode(data)


class TestFiles:
    """Testes de leitura e gravação em disco."""

    def test_write_then_read(self, tmp_path, generic_sequence):
        """Testa gravação seguida de leitura."""
        path = tmp_path / "seq.bsq"
        write_sequence(path, generic_sequence)
        assert read_sequence(path) == generic_sequence
        assert path.stat().st_size == 16 + generic_sequence.length // 8

    def test_no_temporary_files_left(self, tmp_path):
        """Testa que nenhum arquivo temporário sobra."""
        write_sequence(tmp_path / "seq.bsq", BitSequence.constant(10))
        assert [p.name for p in tmp_path.iterdir()] == ["seq.bsq"]

    def test_malformed_file(self, tmp_path):
        """Testa a leitura de arquivo malformado."""
        path = tmp_path / "bad.bsq"
        path.write_bytes(b"garbage")
        with pytest.raises(SequenceFormatError):
            read_sequence(path)
