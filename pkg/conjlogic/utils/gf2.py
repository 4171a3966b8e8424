"""
Bit packing and GF(2) elimination over little-endian 64-bit words
"""
import numpy as np

from conjlogic.config import WORD_BITS

BASE = WORD_BITS
WORD_DTYPE = np.dtype('<u8')


def word_count(n):
    return max(1, (n + BASE - 1) // BASE)


def pack_bits(bits):
    """
    Pack 0/1 values along the last axis into 64-bit words, bit i of the vector
    at bit i % 64 of word i // 64. Trailing bits of the last word are zero.

    Args:
        bits (np.ndarray): (..., n) array of 0/1 values

    Returns:
        np.ndarray: (..., word_count(n)) array of '<u8' words
    """
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    padded = np.zeros(bits.shape[:-1] + (word_count(n) * BASE,), dtype=np.uint8)
    padded[..., :n] = bits
    return np.packbits(padded, axis=-1, bitorder='little').view(WORD_DTYPE)


def unpack_bits(words, n):
    """Inverse of pack_bits: (..., words) -> (..., n) uint8"""
    raw = np.ascontiguousarray(words, dtype=WORD_DTYPE).view(np.uint8)
    return np.unpackbits(raw, axis=-1, count=n, bitorder='little')


def get_bit(words, i):
    word, offset = divmod(i, BASE)
    return (int(words[word]) >> offset) & 1


def lowest_bit(words):
    """Index of the lowest set bit, or -1 for the zero vector"""
    nonzero = np.flatnonzero(words)
    if nonzero.size == 0:
        return -1
    word = int(nonzero[0])
    value = int(words[word])
    return word * BASE + (value & -value).bit_length() - 1


def parity(words):
    """Parity of the total popcount"""
    return int(np.bitwise_count(words).sum()) & 1


class GF2Basis:
    """
    Incremental row echelon basis of packed GF(2) vectors

    Each row is reduced against the rows stored before it and carries none of
    their pivot bits, so one pass in insertion order reduces any vector.
    """

    def __init__(self):
        self.rows = []
        self.pivots = []

    def reduce(self, row):
        row = np.array(row, dtype=WORD_DTYPE)
        for basis_row, pivot in zip(self.rows, self.pivots):
            if get_bit(row, pivot):
                row ^= basis_row
        return row

    def add(self, row):
        """Insert row; False when it already lies in the span"""
        reduced = self.reduce(row)
        pivot = lowest_bit(reduced)
        if pivot < 0:
            return False
        self.rows.append(reduced)
        self.pivots.append(pivot)
        return True

    def contains(self, row):
        return not self.reduce(row).any()

    def rank(self):
        return len(self.pivots)


def gf2_rank(rows):
    """Rank of a sequence of packed rows"""
    basis = GF2Basis()
    for row in rows:
        basis.add(row)
    return basis.rank()
