import itertools

import pytest

from conjlogic.kernel.truth import (
    DISPLAY_ORDER,
    TruthValue,
    conj,
    conj_all,
    disj,
    disj_all,
    material_iff,
    material_implies,
    negate,
    xor3,
)

F, U, T = TruthValue.FALSE, TruthValue.INDETERMINATE, TruthValue.TRUE
PAIRS = list(itertools.product(DISPLAY_ORDER, repeat=2))

# rows (a, b) in the order 00, 0?, 01, ?0, ??, ?1, 10, 1?, 11
CONNECTIVE_TABLE = {
    conj: "000 0?? 0?1",
    disj: "0?1 ??1 111",
    xor3: "0?1 ??? 1?0",
    material_implies: "111 011 001",
    material_iff: "100 010 001",
}


@pytest.mark.parametrize("connective", list(CONNECTIVE_TABLE), ids=lambda f: f.__name__)
def test_connective_table(connective):
    expected = CONNECTIVE_TABLE[connective].replace(" ", "")
    got = "".join(connective(a, b).symbol for a, b in PAIRS)
    assert got == expected


def test_negation_column():
    assert [negate(v) for v in (F, U, T)] == [T, U, F]


def test_spot_values():
    assert conj(F, U) is F
    assert conj(U, T) is U
    assert disj(F, U) is U
    assert disj(T, U) is T
    assert xor3(T, U) is U
    assert material_implies(U, U) is T
    assert material_implies(U, F) is F
    assert material_implies(T, U) is F
    assert material_iff(U, U) is T
    assert material_iff(F, U) is F


@pytest.mark.parametrize("a, b", PAIRS)
def test_de_morgan(a, b):
    assert negate(conj(a, b)) is disj(negate(a), negate(b))
    assert negate(disj(a, b)) is conj(negate(a), negate(b))


def test_commutative_associative_idempotent():
    for a, b in PAIRS:
        assert conj(a, b) is conj(b, a)
        assert disj(a, b) is disj(b, a)
    for a, b, c in itertools.product(DISPLAY_ORDER, repeat=3):
        assert conj(a, conj(b, c)) is conj(conj(a, b), c)
        assert disj(a, disj(b, c)) is disj(disj(a, b), c)
        assert conj(a, disj(b, c)) is disj(conj(a, b), conj(a, c))
        assert disj(a, conj(b, c)) is conj(disj(a, b), disj(a, c))
    for a in DISPLAY_ORDER:
        assert conj(a, a) is a
        assert disj(a, a) is a


@pytest.mark.parametrize("a, b", PAIRS)
def test_iff_is_two_implications(a, b):
    assert material_iff(a, b) is conj(material_implies(a, b), material_implies(b, a))


def test_inverse_fails_only_at_indeterminate():
    for a in DISPLAY_ORDER:
        holds = conj(a, negate(a)) is F and disj(a, negate(a)) is T
        assert holds == (a is not U)


def test_boolean_restriction():
    for a, b in itertools.product((False, True), repeat=2):
        va, vb = TruthValue.from_bool(a), TruthValue.from_bool(b)
        assert conj(va, vb) is TruthValue.from_bool(a and b)
        assert disj(va, vb) is TruthValue.from_bool(a or b)
        assert xor3(va, vb) is TruthValue.from_bool(a != b)
        assert material_implies(va, vb) is TruthValue.from_bool(not a or b)
        assert material_iff(va, vb) is TruthValue.from_bool(a == b)


def test_nary_folds():
    assert conj_all([]) is T
    assert disj_all([]) is F
    assert conj_all([T, U, T]) is U
    assert conj_all([T, U, F]) is F
    assert disj_all([F, U, T]) is T


def test_symbols_round_trip():
    for v in DISPLAY_ORDER:
        assert TruthValue.from_symbol(v.symbol) is v
    assert [v.order for v in DISPLAY_ORDER] == [0, 1, 2]
    with pytest.raises(ValueError):
        TruthValue.from_symbol("2")
