import itertools

import numpy as np
import pytest

from conftest import prop, random_prop
from conjlogic.errors import DimensionMismatchError, PropParseError
from conjlogic.pauli.proposition import (
    PauliLetter,
    Proposition,
    compatible,
    negate_prop,
    weight,
)
from conjlogic.pauli.tableau import PauliTableau

TWO_SYSTEM = ["".join(pair) for pair in itertools.product("IXYZ", repeat=2) if pair != ("I", "I")]


def test_letter_encoding():
    assert [(letter.x, letter.z) for letter in PauliLetter] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert [letter.is_nontrivial for letter in PauliLetter] == [False, True, True, True]
    assert PauliLetter.from_bits(1, 1) is PauliLetter.Y


def test_from_letters():
    p = Proposition.from_letters("XYZI", sign=1)
    assert p.n == 4
    assert p.letters == "XYZI"
    assert [p.letter(i) for i in range(4)] == [PauliLetter.X, PauliLetter.Y, PauliLetter.Z, PauliLetter.I]
    assert p.support() == (0, 1, 2)
    assert p.render() == "<-XYZI>"
    assert p.render("¬") == "<¬XYZI>"


def test_bad_letters():
    with pytest.raises(PropParseError) as info:
        Proposition.from_letters("XQ")
    assert (info.value.kind, info.value.position) == (PropParseError.BAD_LETTER, 1)
    with pytest.raises(PropParseError):
        Proposition.from_letters("")


def test_identity_and_single():
    assert Proposition.identity(3).is_trivial
    assert Proposition.identity(3, sign=1).render() == "<-III>"
    assert Proposition.single(4, 2, PauliLetter.Z).letters == "IIZI"
    with pytest.raises(DimensionMismatchError):
        Proposition.single(2, 2)


def test_immutable_bits():
    p = prop("<XZ>")
    with pytest.raises(ValueError):
        p.xbits[0] = 0


def test_equality_and_hash():
    assert prop("<XZ>") == Proposition.from_letters("XZ")
    assert prop("<XZ>") != prop("<-XZ>")
    assert prop("<XZ>").same_string(prop("<-XZ>"))
    assert len({prop("<XZ>"), Proposition.from_letters("XZ"), prop("<-XZ>")}) == 2


def test_dict_form():
    p = prop("<-YIZ>")
    assert p.to_dict() == {'n': 3, 'letters': "YIZ", 'sign': 1}
    assert Proposition.from_dict(p.to_dict()) == p
    with pytest.raises(PropParseError):
        Proposition.from_dict({'n': 2, 'letters': "YIZ", 'sign': 0})


def test_negation():
    assert negate_prop(prop("<Z>")) == prop("<-Z>")
    assert negate_prop(prop("<-YY>")) == prop("<YY>")


def test_weight():
    assert weight(prop("<XYZIZY>")) == 5
    assert weight(Proposition.identity(4)) == 0
    assert weight(prop("<XI>")) == 1


def test_compatibility_examples():
    zx = prop("<ZX>")
    assert compatible(zx, prop("<XZ>"))
    assert compatible(zx, prop("<YY>"))
    assert not compatible(zx, prop("<ZY>"))


def test_compatibility_row_of_zx():
    zx = prop("<ZX>")
    partners = {s for s in TWO_SYSTEM if s != "ZX" and compatible(zx, Proposition.from_letters(s))}
    assert partners == {"ZI", "IX", "XZ", "YY", "XY", "YZ"}


def test_compatibility_symmetric_reflexive_sign_free():
    for a, b in itertools.product(TWO_SYSTEM, repeat=2):
        p, q = Proposition.from_letters(a), Proposition.from_letters(b)
        assert compatible(p, q) == compatible(q, p)
        assert compatible(p, q) == compatible(negate_prop(p), q)
    for a in TWO_SYSTEM:
        assert compatible(Proposition.from_letters(a), Proposition.from_letters(a))


def test_compatibility_matches_letter_count(rng):
    for _ in range(10_000):
        n = int(rng.integers(1, 257))
        p, q = random_prop(rng, n, nontrivial=False), random_prop(rng, n, nontrivial=False)
        differing = sum(
            1 for a, b in zip(p.letters, q.letters) if a != "I" and b != "I" and a != b
        )
        assert compatible(p, q) == (differing % 2 == 0)


def test_compatibility_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        compatible(prop("<X>"), prop("<XX>"))


def test_tableau_round_trip(rng):
    props = [random_prop(rng, 70, nontrivial=False) for _ in range(6)]
    tab = PauliTableau.from_props(props)
    assert (len(tab), tab.n) == (6, 70)
    assert tab.to_props() == props
    assert tab.row(3) == props[3]
    tail = tab.tail(4)
    tail.sign ^= 1
    assert tab.row(5) == negate_prop(props[5])
    assert tab.copy().to_props() == tab.to_props()


def test_tableau_rejects_mixed_sizes():
    with pytest.raises(DimensionMismatchError):
        PauliTableau.from_props([prop("<X>"), prop("<XX>")])
    with pytest.raises(DimensionMismatchError):
        PauliTableau.from_props([])
    assert PauliTableau.from_props([], n=3).to_props() == []


def test_sort_key_orders_letters_then_sign():
    props = [prop("<ZI>"), prop("<-XI>"), prop("<XI>"), prop("<IY>")]
    ordered = sorted(props, key=lambda p: p.sort_key)
    assert [p.render() for p in ordered] == ["<IY>", "<XI>", "<-XI>", "<ZI>"]


def test_from_bits_shape_check():
    with pytest.raises(DimensionMismatchError):
        Proposition.from_bits(np.zeros(3), np.zeros(2))
