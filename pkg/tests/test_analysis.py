import itertools

import pytest

from conjlogic.analysis import (
    PM_CONTEXTS,
    cz_consistency_check,
    formula_table,
    law_report,
    law_table,
    pm_square,
)
from conjlogic.analysis.contextuality import _search
from conjlogic.clifford.gates import CzChoice, TheoryVariant
from conjlogic.kernel.formula import parse_formula
from conjlogic.kernel.laws import LAWS_BY_ID


# -------- PM square --------

def test_quantum_square_is_contextual():
    report = pm_square(TheoryVariant.QUANTUM)
    parities = {c.name: c.parity for c in report.constraints}
    assert parities == {
        "row 1": 0, "row 2": 0, "row 3": 0,
        "column 1": 0, "column 2": 0, "column 3": 1,
    }
    assert report.parity_witness == 1
    assert not report.satisfiable
    assert report.assignment is None
    assert report.constraints[-1].prediction.render() == "<-YY>"


def test_toy_square_admits_values():
    report = pm_square(TheoryVariant.SPEKKENS_TOY)
    assert all(c.parity == 0 for c in report.constraints)
    assert report.parity_witness == 0
    assert report.satisfiable
    assert all(c.satisfied_by(report.assignment) for c in report.constraints)
    assert report.assignment == ((0, 0, 0), (0, 0, 0), (0, 0, 0))


def test_every_context_is_compatible():
    report = pm_square()
    assert len(report.constraints) == len(PM_CONTEXTS) == 6
    assert all(c.compatible for c in report.constraints)


def test_square_dict():
    data = pm_square().to_dict()
    assert data['square'] == [["ZI", "IZ", "ZZ"], ["IX", "XI", "XX"], ["ZX", "XZ", "YY"]]
    assert data['satisfiable'] is False
    assert data['assignment'] is None
    toy = pm_square(TheoryVariant.SPEKKENS_TOY).to_dict()
    assert toy['assignment']['YY'] == 0


def test_verdict_does_not_depend_on_search_order(variant, rng):
    report = pm_square(variant)
    assignments = list(itertools.product((0, 1), repeat=9))
    for _ in range(5):
        order = [assignments[i] for i in rng.permutation(len(assignments))]
        found = _search(report.constraints, order)
        assert (found is not None) == report.satisfiable
        if found is not None:
            assert all(c.satisfied_by(found) for c in report.constraints)


# -------- CZ consistency --------

def test_standard_cz_is_consistent():
    report = cz_consistency_check(CzChoice.STANDARD)
    assert report.via_reduction.render() == "<YIY>"
    assert report.via_triple_cz.render() == "<YIY>"
    assert not report.contradiction_found
    assert not report.state.poisoned
    assert [p.render() for p in report.reduction.reduced] == ["<-XII>", "<-IXI>"]


def test_tilde_cz_contradicts_itself():
    report = cz_consistency_check(CzChoice.TILDE)
    assert report.via_reduction.render() == "<YIY>"
    assert report.via_triple_cz.render() == "<-YIY>"
    assert report.contradiction_found
    assert report.state.poisoned
    data = report.to_dict()
    assert data['cz'] == "tilde"
    assert [p['sign'] for p in data['derived']] == [0, 1]


# -------- Law tables --------

def test_law_table_shapes():
    assert len(law_table(LAWS_BY_ID["I2"])) == 27
    table = law_table(LAWS_BY_ID["E9"])
    assert len(table) == 3
    assert list(table["p"]) == ["0", "?", "1"]
    assert list(table["p ∧ ¬p ⇔ <-I>"]) == ["1", "0", "1"]
    assert list(table["p ∨ ¬p ⇔ <I>"]) == ["1", "0", "1"]


def test_law_report_serializes():
    data = law_report().to_dict()
    assert len(data['laws']) == 21
    assert set(data['tables']) == set(LAWS_BY_ID)
    assert data['tables']["E1"][1] == {"p": "?", "¬¬p": "?", "¬¬p ⇔ p": "1"}


def test_formula_table():
    formulas, names = parse_formula("a -> b", "!a | b")
    table = formula_table(formulas, names)
    assert list(table.columns) == ["a", "b", "a → b", "¬a ∨ b"]
    assert len(table) == 9
    row = table[(table["a"] == "?") & (table["b"] == "?")].iloc[0]
    assert (row["a → b"], row["¬a ∨ b"]) == ("1", "?")


@pytest.mark.parametrize("law_id", ["E11", "I6"])
def test_failing_laws_show_a_zero(law_id):
    table = law_table(LAWS_BY_ID[law_id])
    assert "0" in set(table.iloc[:, -1])
