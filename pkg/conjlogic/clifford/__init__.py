"""
Clifford transformations: gate rules, theory variants and transcripts
"""
from .gates import (
    TheoryVariant,
    CzChoice,
    GateKind,
    Gate,
    single_rule,
    cz_rule,
    apply_gate,
    apply_gate_tableau,
    apply_single_layer,
    apply_cz_fanout,
)
from .transcript import (
    Transcript,
    invert_transcript,
    cnot,
    apply_transcript,
    apply_transcript_many,
    apply_transcript_tableau,
    parse_transcript,
    format_transcript,
)

__all__ = [
    'TheoryVariant',
    'CzChoice',
    'GateKind',
    'Gate',
    'single_rule',
    'cz_rule',
    'apply_gate',
    'apply_gate_tableau',
    'apply_single_layer',
    'apply_cz_fanout',
    'Transcript',
    'invert_transcript',
    'cnot',
    'apply_transcript',
    'apply_transcript_many',
    'apply_transcript_tableau',
    'parse_transcript',
    'format_transcript',
]
