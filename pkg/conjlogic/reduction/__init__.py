"""
Clifford reduction of single propositions, pairs and compatible sets
"""
from .reducer import (
    Relation,
    ReductionStage,
    ReductionResult,
    reduce_single,
    reduce_pair,
    reduce_set,
    augment,
)

__all__ = [
    'Relation',
    'ReductionStage',
    'ReductionResult',
    'reduce_single',
    'reduce_pair',
    'reduce_set',
    'augment',
]
