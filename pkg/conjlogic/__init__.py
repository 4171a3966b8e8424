"""
conjlogic: three-valued logic of predictions on conjugate degrees of freedom

Propositions are signed Pauli strings, transformed by Clifford gates under the
quantum or the toy-theory sign rules and reduced to single-system form to
decide what a conjunction predicts.
"""
from conjlogic.clifford import CzChoice, Gate, GateKind, TheoryVariant, Transcript
from conjlogic.kernel import TruthValue
from conjlogic.knowledge import KnowledgeState, closure, measure, predicts
from conjlogic.pauli import Proposition, parse_conjunction, parse_prop
from conjlogic.reduction import reduce_pair, reduce_set, reduce_single

__version__ = "0.1.0"

__all__ = [
    'CzChoice',
    'Gate',
    'GateKind',
    'TheoryVariant',
    'Transcript',
    'TruthValue',
    'KnowledgeState',
    'closure',
    'measure',
    'predicts',
    'Proposition',
    'parse_conjunction',
    'parse_prop',
    'reduce_pair',
    'reduce_set',
    'reduce_single',
]
