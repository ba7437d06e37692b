"""
Configurações do projeto de sequências bivalentes.
"""

import os
from typing import Optional
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Configurações da aplicação."""

    # Configurações da aplicação
    APP_NAME: str = "Sequências Bivalentes - Modelo de Dois Estados"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Configurações de logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_FILE: Optional[str] = None
    LOG_JSON: bool = False

    # Configurações de reprodutibilidade
    # Semente fixa: execuções sem --seed continuam reproduzíveis
    DEFAULT_SEED: int = 20231017
    DEFAULT_TRIALS: int = 100_000

    # Configurações das sequências
    SEQUENCE_LENGTH: int = 2 ** 20
    WINDOW_BITS: int = 64
    GUARD_BITS: int = 16
    MAX_LOG2_DENOMINATOR: int = 30

    # Configurações de Monte Carlo
    TRIAL_BLOCK_SIZE: int = 8192
    TRIAL_BLOCK_BITS: int = 2 ** 24  # bits desempacotados por bloco
    PARALLEL_JOBS: int = 1
    EPR_SCAN_POINTS: int = 13

    # Tolerâncias numéricas
    LATITUDE_TOLERANCE: float = 1e-12
    NORM_TOLERANCE: float = 1e-9
    STATE_TOLERANCE: float = 1e-12

    # Configurações de saída
    OUTPUT_FORMAT: str = "json"  # json, csv
    RESULTS_PATH: str = "results"

    class Config:
        env_file = ".env"
        case_sensitive = True


# Configurações específicas por ambiente
class DevelopmentSettings(Settings):
    """Configurações para desenvolvimento."""
    DEBUG: bool = True


class ProductionSettings(Settings):
    """Configurações para execuções longas (lotes de experimentos)."""
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    PARALLEL_JOBS: int = -1


class TestingSettings(Settings):
    """Configurações para testes."""
    DEBUG: bool = True
    LOG_LEVEL: str = "DEBUG"
    DEFAULT_TRIALS: int = 20_000
    SEQUENCE_LENGTH: int = 2 ** 14


def get_settings() -> Settings:
    """
    Retorna as configurações baseadas no ambiente.
    """
    environment = os.getenv("ENVIRONMENT", "development").lower()

    if environment == "production":
        return ProductionSettings()
    elif environment == "testing":
        return TestingSettings()
    else:
        return DevelopmentSettings()


# Instância global das configurações
settings = get_settings()
