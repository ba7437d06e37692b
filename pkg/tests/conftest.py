"""
Fixtures compartilhadas pelos testes.
"""

import os

import pytest
from hypothesis import settings as hypothesis_settings

os.environ.setdefault("ENVIRONMENT", "testing")

from src.sequences import BitSequence, random_sequence, write_sequence  # noqa: E402

hypothesis_settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis_settings.load_profile("ci")

SEED = 12345


@pytest.fixture(scope="session")
def seed() -> int:
    """Semente fixa dos testes."""
    return SEED


@pytest.fixture
def short_sequence() -> BitSequence:
    """Sequência de 8 elementos conhecida."""
    return BitSequence.from_values([1, -1, -1, 1, 1, 1, -1, -1])


@pytest.fixture(scope="module")
def generic_sequence() -> BitSequence:
    """Sequência genérica de 2^16 elementos."""
    return random_sequence(2 ** 16, SEED)


@pytest.fixture
def sequence_file(tmp_path):
    """Arquivo BSQ1 com 4096 elementos genéricos."""
    path = tmp_path / "input.bsq"
    write_sequence(path, random_sequence(4096, SEED))
    return path
