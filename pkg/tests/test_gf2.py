import numpy as np
import pytest

from conjlogic.utils.gf2 import (
    GF2Basis,
    gf2_rank,
    get_bit,
    lowest_bit,
    pack_bits,
    parity,
    unpack_bits,
    word_count,
)


@pytest.mark.parametrize("n, words", [(1, 1), (64, 1), (65, 2), (200, 4)])
def test_word_count(n, words):
    assert word_count(n) == words


def test_bit_layout_crosses_word_boundary():
    bits = np.zeros(130, dtype=np.uint8)
    bits[[0, 63, 64, 129]] = 1
    words = pack_bits(bits)
    assert words.shape == (3,)
    assert int(words[0]) == 1 | (1 << 63)
    assert int(words[1]) == 1
    assert int(words[2]) == 2
    assert [get_bit(words, i) for i in (0, 1, 63, 64, 129)] == [1, 0, 1, 1, 1]
    np.testing.assert_array_equal(unpack_bits(words, 130), bits)


def test_pack_along_last_axis(rng):
    bits = rng.integers(2, size=(5, 70), dtype=np.uint8)
    words = pack_bits(bits)
    assert words.shape == (5, 2)
    np.testing.assert_array_equal(unpack_bits(words, 70), bits)


def test_lowest_bit_and_parity():
    bits = np.zeros(100, dtype=np.uint8)
    assert lowest_bit(pack_bits(bits)) == -1
    bits[[70, 99]] = 1
    assert lowest_bit(pack_bits(bits)) == 70
    assert parity(pack_bits(bits)) == 0
    bits[3] = 1
    assert parity(pack_bits(bits)) == 1


def test_rank_of_dependent_rows():
    rows = [pack_bits(np.array(r, dtype=np.uint8)) for r in ([1, 0, 0], [0, 1, 0], [1, 1, 0])]
    assert gf2_rank(rows) == 2


def test_basis_membership():
    basis = GF2Basis()
    a = pack_bits(np.array([1, 1, 0, 1], dtype=np.uint8))
    b = pack_bits(np.array([0, 1, 1, 0], dtype=np.uint8))
    assert basis.add(a)
    assert basis.add(b)
    assert not basis.add(a ^ b)
    assert basis.contains(a ^ b)
    assert not basis.contains(pack_bits(np.array([0, 0, 0, 1], dtype=np.uint8)))
    assert basis.rank() == 2


def test_rank_matches_dense_elimination(rng):
    for _ in range(50):
        m = rng.integers(2, size=(int(rng.integers(1, 8)), 70), dtype=np.uint8)
        # independent rows combined by a random invertible-or-not mixing
        mixed = (rng.integers(2, size=(m.shape[0], m.shape[0])) @ m) % 2
        assert gf2_rank(pack_bits(mixed.astype(np.uint8))) == _dense_rank(mixed)


def _dense_rank(m):
    m = m.copy() % 2
    rank = 0
    for col in range(m.shape[1]):
        rows = np.flatnonzero(m[rank:, col]) + rank
        if rows.size == 0:
            continue
        m[[rank, rows[0]]] = m[[rows[0], rank]]
        for row in np.flatnonzero(m[:, col]):
            if row != rank:
                m[row] ^= m[rank]
        rank += 1
        if rank == m.shape[0]:
            break
    return rank
