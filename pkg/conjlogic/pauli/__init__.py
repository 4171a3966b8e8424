"""
Pauli-string propositions: representation, text grammar and compatibility
"""
from .proposition import (
    PauliLetter,
    Proposition,
    compatible,
    negate_prop,
    weight,
)
from .parser import (
    parse_prop,
    format_prop,
    parse_conjunction,
    format_conjunction,
)
from .tableau import PauliTableau

__all__ = [
    'PauliLetter',
    'Proposition',
    'compatible',
    'negate_prop',
    'weight',
    'parse_prop',
    'format_prop',
    'parse_conjunction',
    'format_conjunction',
    'PauliTableau',
]
