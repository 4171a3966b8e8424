import pytest

from conftest import prop, random_prop
from conjlogic.clifford.gates import Gate, GateKind, apply_gate
from conjlogic.clifford.transcript import (
    Transcript,
    apply_transcript,
    apply_transcript_many,
    cnot,
    format_transcript,
    invert_transcript,
    parse_transcript,
)
from conjlogic.cli.bench import scramble_transcript
from conjlogic.errors import GateError, TranscriptParseError


def test_parse_and_format():
    t = parse_transcript("S@2; H@1; CZ@(1,2)")
    assert list(t) == [Gate.single(GateKind.S, 1), Gate.single(GateKind.H, 0), Gate.cz(0, 1)]
    assert format_transcript(t) == "S@2; H@1; CZ@(1,2)"
    assert parse_transcript(t.render()) == t


def test_parse_aliases_and_spacing():
    t = parse_transcript(" FlipX@1 ;Y @ 2; Z@3; Sinv@1; CZ@( 2 , 3 ) ;")
    assert [g.kind for g in t] == [GateKind.FLIP_X, GateKind.FLIP_Y, GateKind.FLIP_Z, GateKind.SINV, GateKind.CZ]
    assert parse_transcript("") == Transcript()


def test_cnot_expands():
    assert parse_transcript("CNOT@(1,2)") == cnot(0, 1)
    assert cnot(0, 1).render() == "H@2; CZ@(1,2); H@2"
    with pytest.raises(GateError):
        cnot(2, 2)


def test_cnot_action(variant, cz):
    t = cnot(0, 1)
    assert apply_transcript(prop("<XI>"), t, variant, cz) == prop("<XX>")
    assert apply_transcript(prop("<ZI>"), t, variant, cz) == prop("<ZI>")
    assert apply_transcript(prop("<IZ>"), t, variant, cz) == prop("<ZZ>")


@pytest.mark.parametrize(
    "text",
    ["S@0", "Q@1", "CZ@(1,1)", "CZ@(1)", "H@", "S2", "CNOT@(3,3)"],
)
def test_parse_errors(text):
    with pytest.raises(TranscriptParseError):
        parse_transcript(text)


def test_inverse_swaps_phase_gates():
    t = parse_transcript("S@1; H@2; CZ@(1,2); Sinv@2")
    assert invert_transcript(t).render() == "S@2; CZ@(1,2); H@2; Sinv@1"
    assert t.inverse().inverse() == t


def test_transcript_then_inverse_is_identity(rng, variant, cz):
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        p = random_prop(rng, n, nontrivial=False)
        t = scramble_transcript(n, rng, rounds=2)
        image = apply_transcript(p, t, variant, cz)
        assert apply_transcript(image, t.inverse(), variant, cz) == p


def test_layered_application_matches_fold(rng, variant, cz):
    for _ in range(200):
        n = int(rng.integers(2, 7))
        p = random_prop(rng, n, nontrivial=False)
        t = scramble_transcript(n, rng, rounds=2) + parse_transcript("CZ@(1,2); CZ@(2,1); H@1; H@1")
        expected = p
        for gate in t:
            expected = apply_gate(expected, gate, variant, cz)
        assert apply_transcript(p, t, variant, cz) == expected


def test_layers_group_runs():
    t = parse_transcript("S@2; S@6; H@2; H@6; CZ@(1,2); CZ@(1,3); CZ@(3,1); S@2; S@2")
    assert t.layers() == [
        (GateKind.S, None, (1, 5)),
        (GateKind.H, None, (1, 5)),
        (GateKind.CZ, 0, (1, 2)),
        (GateKind.CZ, 2, (0,)),
        (GateKind.S, None, (1,)),
        (GateKind.S, None, (1,)),
    ]


def test_span_and_target_check():
    t = parse_transcript("H@1; CZ@(2,4)")
    assert t.span == 4
    assert Transcript().span == 0
    with pytest.raises(GateError):
        apply_transcript(prop("<XYZ>"), t)


def test_empty_transcript_is_identity(variant):
    p = prop("<-XYZ>")
    assert apply_transcript(p, Transcript(), variant) == p


def test_many_and_list_form():
    t = parse_transcript("S@1; CZ@(1,2)")
    assert Transcript.from_list(t.to_list()) == t
    assert t.to_list() == [{'kind': "S", 'targets': [1]}, {'kind': "CZ", 'targets': [1, 2]}]
    images = apply_transcript_many([prop("<XI>"), prop("<IX>")], t)
    assert [p.render() for p in images] == ["<YZ>", "<ZX>"]
    with pytest.raises(TranscriptParseError):
        Transcript.from_list([{'kind': "T", 'targets': [1]}])


def test_slicing_and_concatenation():
    t = parse_transcript("S@1; H@2; CZ@(1,2)")
    assert isinstance(t[:2], Transcript)
    assert t[:2] + t[2:] == t
    assert t[2] == Gate.cz(0, 1)
