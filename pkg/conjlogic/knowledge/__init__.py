"""
Knowledge states, predictions and measurement
"""
from .state import (
    KnowledgeState,
    closure,
    sorted_closure,
    predicts,
    assert_prop,
    independent,
    derive_via,
)
from .measurement import (
    MeasurementRecord,
    measure,
    measure_sequence,
)

__all__ = [
    'KnowledgeState',
    'closure',
    'sorted_closure',
    'predicts',
    'assert_prop',
    'independent',
    'derive_via',
    'MeasurementRecord',
    'measure',
    'measure_sequence',
]
