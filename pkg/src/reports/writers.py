"""
Serialização dos relatórios em JSON e CSV.

A saída é determinística: sem carimbos de tempo, chaves na ordem dos
campos e floats em repr de ida e volta.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel

from src.utils.io import atomic_write_text

logger = logging.getLogger(__name__)

Payload = Union[BaseModel, Sequence[BaseModel], Dict[str, Any], List[Dict[str, Any]]]


def _plain(payload: Payload) -> Any:
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    if isinstance(payload, dict):
        return {key: _plain(value) for key, value in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [_plain(item) for item in payload]
    return payload


def render_json(payload: Payload) -> str:
    """JSON com indentação de 2 espaços e quebra de linha final."""
    return json.dumps(_plain(payload), indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: Union[pd.DataFrame, List[Dict[str, Any]]], columns: Optional[Sequence[str]] = None) -> str:
    """
    CSV com cabeçalho, sem índice, separador de linha '\\n'.
    """
    frame = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(list(rows), columns=columns)
    if columns is not None:
        frame = frame.loc[:, list(columns)]
    return frame.to_csv(index=False, lineterminator="\n", float_format=lambda x: repr(float(x)))


def write_text(path: Union[str, Path], text: str) -> None:
    """Grava o relatório renderizado de forma atômica."""
    atomic_write_text(path, text)
    logger.info(f"Relatório gravado em: {path}")


__all__ = ["render_json", "render_csv", "write_text"]
