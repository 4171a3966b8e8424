"""
Law suite with one truth table per law, as pandas DataFrames
"""
from dataclasses import dataclass

import pandas as pd

from conjlogic.kernel.formula import atom_count, atom_name
from conjlogic.kernel.laws import EQUIVALENCE, LAWS, law_suite, truth_table
from conjlogic.kernel.truth import material_iff, material_implies


@dataclass(frozen=True)
class LawTables:
    report: object  # kernel LawReport
    tables: dict  # law_id -> DataFrame

    def to_dict(self):
        return {
            'laws': self.report.to_dict(),
            'tables': {law_id: df.to_dict(orient='records') for law_id, df in self.tables.items()},
        }


def law_table(law):
    """
    Truth table of one law, rows in the order 0 < ? < 1 with the first atom
    most significant

    Columns are the atoms, each distinct side of every equation, and one
    relation column per equation (⇔ via material_iff, ⇒ via material_implies).
    """
    formulas = [f for eq in law.equations for f in (eq.lhs, eq.rhs)]
    count = atom_count(*formulas)
    rows = truth_table(formulas, count)

    columns = {atom_name(i): [values[i].symbol for values, _ in rows] for i in range(count)}
    for index, eq in enumerate(law.equations):
        relation = material_iff if eq.kind == EQUIVALENCE else material_implies
        lhs = [results[2 * index] for _, results in rows]
        rhs = [results[2 * index + 1] for _, results in rows]
        for formula, values in ((eq.lhs, lhs), (eq.rhs, rhs)):
            columns.setdefault(str(formula), [v.symbol for v in values])
        columns[eq.render()] = [relation(a, b).symbol for a, b in zip(lhs, rhs)]
    return pd.DataFrame(columns)


def law_report():
    """
    Run the law suite and tabulate every law

    Returns:
        LawTables: the kernel report and one DataFrame per law id
    """
    return LawTables(law_suite(), {law.law_id: law_table(law) for law in LAWS})


def formula_table(formulas, names):
    """
    Truth table of parsed formulas over their shared atoms

    Args:
        formulas (Sequence[Formula]): formulas from parse_formula
        names (Sequence[str]): atom names by id

    Returns:
        pd.DataFrame: one column per atom, then one per formula
    """
    rows = truth_table(formulas, len(names))
    columns = {name: [values[i].symbol for values, _ in rows] for i, name in enumerate(names)}
    for index, f in enumerate(formulas):
        columns[f.render(names)] = [results[index].symbol for _, results in rows]
    return pd.DataFrame(columns)
