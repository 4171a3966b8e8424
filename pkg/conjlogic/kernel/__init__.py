"""
Three-valued kernel: truth values, connectives, formulas and the law suite
"""
from .truth import (
    TruthValue,
    DISPLAY_ORDER,
    negate,
    conj,
    disj,
    xor3,
    material_implies,
    material_iff,
    conj_all,
    disj_all,
)
from .formula import (
    Formula,
    Atom,
    Not,
    And,
    Or,
    Xor,
    Implies,
    Iff,
    Tautology,
    Contradiction,
    evaluate,
    atom_count,
    atom_name,
    parse_formula,
)
from .laws import (
    EQUIVALENCE,
    IMPLICATION,
    CheckResult,
    Counterexample,
    Law,
    LawEquation,
    LawVerdict,
    LawReport,
    LAWS,
    LAWS_BY_ID,
    assignments,
    counterexamples,
    logically_implies,
    logically_equivalent,
    check_law,
    law_suite,
    truth_table,
)

__all__ = [
    'TruthValue',
    'DISPLAY_ORDER',
    'negate',
    'conj',
    'disj',
    'xor3',
    'material_implies',
    'material_iff',
    'conj_all',
    'disj_all',
    'Formula',
    'Atom',
    'Not',
    'And',
    'Or',
    'Xor',
    'Implies',
    'Iff',
    'Tautology',
    'Contradiction',
    'evaluate',
    'atom_count',
    'atom_name',
    'parse_formula',
    'EQUIVALENCE',
    'IMPLICATION',
    'CheckResult',
    'Counterexample',
    'Law',
    'LawEquation',
    'LawVerdict',
    'LawReport',
    'LAWS',
    'LAWS_BY_ID',
    'assignments',
    'counterexamples',
    'logically_implies',
    'logically_equivalent',
    'check_law',
    'law_suite',
    'truth_table',
]
