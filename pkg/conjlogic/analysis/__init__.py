"""
Analyses: contextuality of the PM square, CZ-choice consistency, law tables
"""
from .contextuality import (
    PM_LETTERS,
    PM_CONTEXTS,
    PmConstraint,
    PmReport,
    pm_square,
)
from .consistency import (
    TRIPLE_CZ_ROUTE,
    ConsistencyReport,
    cz_consistency_check,
)
from .law_report import (
    LawTables,
    formula_table,
    law_table,
    law_report,
)

__all__ = [
    'PM_LETTERS',
    'PM_CONTEXTS',
    'PmConstraint',
    'PmReport',
    'pm_square',
    'TRIPLE_CZ_ROUTE',
    'ConsistencyReport',
    'cz_consistency_check',
    'LawTables',
    'formula_table',
    'law_table',
    'law_report',
]
