"""
Núcleo das sequências bivalentes: representação, operadores i^q e formato BSQ1.
"""

from .dyadic import DyadicExponent
from .bitseq import (
    BitSequence,
    SequenceStats,
    PrefixInterval,
    from_real_bits,
    random_sequence,
    prefix_real,
    negate,
    apply_i,
    apply_i_root,
    apply_i_power,
    induced_real,
    stats,
)
from .codec import encode, decode, read_sequence, write_sequence

__all__ = [
    "DyadicExponent",
    "BitSequence",
    "SequenceStats",
    "PrefixInterval",
    "from_real_bits",
    "random_sequence",
    "prefix_real",
    "negate",
    "apply_i",
    "apply_i_root",
    "apply_i_power",
    "induced_real",
    "stats",
    "encode",
    "decode",
    "read_sequence",
    "write_sequence",
]
