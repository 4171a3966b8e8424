"""
Utilities package: packed GF(2) vectors
"""
from .gf2 import (
    BASE,
    WORD_DTYPE,
    word_count,
    pack_bits,
    unpack_bits,
    get_bit,
    lowest_bit,
    parity,
    GF2Basis,
    gf2_rank,
)

__all__ = [
    'BASE',
    'WORD_DTYPE',
    'word_count',
    'pack_bits',
    'unpack_bits',
    'get_bit',
    'lowest_bit',
    'parity',
    'GF2Basis',
    'gf2_rank',
]
