import pytest

from conjlogic.errors import AtomLimitError
from conjlogic.kernel.formula import And, Atom, Implies, Not, Or
from conjlogic.kernel.laws import (
    IMPLICATION,
    LAWS,
    LAWS_BY_ID,
    assignments,
    check_law,
    counterexamples,
    law_suite,
    logically_equivalent,
    logically_implies,
    truth_table,
)
from conjlogic.kernel.truth import TruthValue

F, U, T = TruthValue.FALSE, TruthValue.INDETERMINATE, TruthValue.TRUE
p, q = Atom(0), Atom(1)

FAILING = {"E9", "E11", "I6"}


def test_modus_ponens_holds():
    assert logically_implies(And(Implies(p, q), p), q).holds


def test_disjunctive_syllogism_counterexample():
    result = logically_implies(And(Or(p, q), Not(q)), p)
    assert not result.holds
    assert result.counterexample == {0: F, 1: U}


def test_implication_law_counterexample():
    result = logically_equivalent(Implies(p, q), Or(Not(p), q))
    assert not result.holds
    assert result.counterexample == {0: U, 1: F}


def test_reflexive_checks():
    assert logically_implies(p, p).holds
    assert logically_equivalent(Not(Not(p)), p).holds


def test_assignment_order():
    rows = list(assignments(2))
    assert rows[:4] == [(F, F), (F, U), (F, T), (U, F)]
    assert len(rows) == 9


def test_atom_cap():
    with pytest.raises(AtomLimitError):
        list(assignments(9))


def test_law_table_has_every_law():
    assert [law.law_id for law in LAWS] == [f"E{i}" for i in range(1, 14)] + [f"I{i}" for i in range(1, 9)]


@pytest.mark.parametrize("law", LAWS, ids=lambda law: law.law_id)
def test_verdicts(law):
    verdict = check_law(law)
    assert verdict.holds == (law.law_id not in FAILING)
    assert verdict.matches_expected


def test_inverse_law_counterexamples():
    verdict = check_law(LAWS_BY_ID["E9"])
    for failures in verdict.counterexamples:
        assert [c.atom_values for c in failures] == [(U,)]
    conj_row, disj_row = (failures[0] for failures in verdict.counterexamples)
    assert (conj_row.lhs, conj_row.rhs) == (U, F)
    assert (disj_row.lhs, disj_row.rhs) == (U, T)


def test_implication_law_counterexample_set():
    (failures,) = check_law(LAWS_BY_ID["E11"]).counterexamples
    assert [c.atom_values for c in failures] == [(U, F), (U, U), (T, U)]
    assert [(c.lhs, c.rhs) for c in failures] == [(F, U), (T, U), (F, U)]


def test_disjunctive_syllogism_counterexample_set():
    (failures,) = check_law(LAWS_BY_ID["I6"]).counterexamples
    assert [c.atom_values for c in failures] == [(F, U)]
    assert (failures[0].lhs, failures[0].rhs) == (U, F)


def test_counterexamples_of_implication_kind():
    failures = counterexamples(And(Or(p, q), Not(q)), p, IMPLICATION)
    assert len(failures) == 1
    assert failures[0].to_dict() == {'atom_values': {'p': '0', 'q': '?'}, 'lhs': '?', 'rhs': '0'}


def test_suite_report():
    report = law_suite()
    assert report.matches_expected
    assert len(report.verdicts) == 21
    assert report["E12"].holds
    assert not report["E9"].holds
    data = report["E9"].to_dict()
    assert data['law_id'] == "E9"
    assert [c['equation'] for c in data['counterexamples']] == [1, 2]
    with pytest.raises(KeyError):
        report["E14"]


def test_truth_table_rows():
    rows = truth_table([Implies(Not(p), And(p, Not(p)))])
    assert [(values[0], results[0]) for values, results in rows] == [(F, F), (U, T), (T, T)]
