"""
Interface de linha de comando (click).
"""

from .main import cli, main, DataError

__all__ = ["cli", "main", "DataError"]
