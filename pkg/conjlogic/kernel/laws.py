"""
Exhaustive checking of logical equivalence and implication, and the law suite
"""
import itertools
import logging
from dataclasses import dataclass, field

from conjlogic.config import MAX_LAW_ATOMS
from conjlogic.errors import AtomLimitError
from conjlogic.kernel.formula import (
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Tautology,
    Contradiction,
    atom_count,
    atom_name,
)
from conjlogic.kernel.truth import DISPLAY_ORDER, TruthValue, material_implies, material_iff

logger = logging.getLogger(__name__)

EQUIVALENCE = "equivalence"
IMPLICATION = "implication"


@dataclass(frozen=True)
class Counterexample:
    atom_values: tuple  # TruthValue per atom id
    lhs: TruthValue
    rhs: TruthValue

    @property
    def assignment(self):
        return dict(enumerate(self.atom_values))

    def to_dict(self, names=None):
        return {
            'atom_values': {
                (names[i] if names else atom_name(i)): v.symbol for i, v in enumerate(self.atom_values)
            },
            'lhs': self.lhs.symbol,
            'rhs': self.rhs.symbol,
        }


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    counterexample: dict = None  # first failing assignment, atom id -> TruthValue


def assignments(count):
    """All 3^count assignments in lexicographic order 0 < ? < 1, first atom most significant"""
    if count > MAX_LAW_ATOMS:
        raise AtomLimitError(f"{count} atoms exceed the exhaustive limit of {MAX_LAW_ATOMS}")
    return itertools.product(DISPLAY_ORDER, repeat=count)


def _relation(kind):
    return material_iff if kind == EQUIVALENCE else material_implies


def counterexamples(f, g, kind=EQUIVALENCE, count=None):
    """
    Every assignment on which f and g fail the relation

    Args:
        f (Formula): left-hand side
        g (Formula): right-hand side
        kind (str): EQUIVALENCE or IMPLICATION
        count (int): atom id space size (defaults to the formulas' own)

    Returns:
        list[Counterexample]: failing rows in lexicographic order
    """
    relation = _relation(kind)
    count = atom_count(f, g) if count is None else count
    failures = []
    for values in assignments(count):
        env = dict(enumerate(values))
        lhs, rhs = f.evaluate(env), g.evaluate(env)
        if relation(lhs, rhs) is not TruthValue.TRUE:
            failures.append(Counterexample(values, lhs, rhs))
    return failures


def _check(f, g, kind):
    relation = _relation(kind)
    for values in assignments(atom_count(f, g)):
        env = dict(enumerate(values))
        if relation(f.evaluate(env), g.evaluate(env)) is not TruthValue.TRUE:
            return CheckResult(False, env)
    return CheckResult(True)


def logically_implies(f, g):
    """f ⇒ g: the material conditional is 1 on every assignment"""
    return _check(f, g, IMPLICATION)


def logically_equivalent(f, g):
    """f ⇔ g: identical truth table entries"""
    return _check(f, g, EQUIVALENCE)


# =============================================================================
# LAW TABLE
# =============================================================================

@dataclass(frozen=True)
class LawEquation:
    lhs: object
    rhs: object
    kind: str = EQUIVALENCE

    def render(self):
        arrow = "⇔" if self.kind == EQUIVALENCE else "⇒"
        return f"{self.lhs} {arrow} {self.rhs}"


@dataclass(frozen=True)
class Law:
    law_id: str
    name: str
    equations: tuple
    expected_holds: bool = True


p, q, r = Atom(0), Atom(1), Atom(2)
TOP, BOTTOM = Tautology(), Contradiction()


def _eq(lhs, rhs):
    return LawEquation(lhs, rhs, EQUIVALENCE)


def _imp(lhs, rhs):
    return LawEquation(lhs, rhs, IMPLICATION)


LAWS = (
    Law("E1", "Double negation", (_eq(Not(Not(p)), p),)),
    Law("E2", "De Morgan's laws", (
        _eq(Not(And(p, q)), Or(Not(p), Not(q))),
        _eq(Not(Or(p, q)), And(Not(p), Not(q))),
    )),
    Law("E3", "Commutative laws", (_eq(And(p, q), And(q, p)), _eq(Or(p, q), Or(q, p)))),
    Law("E4", "Associative laws", (
        _eq(And(p, And(q, r)), And(And(p, q), r)),
        _eq(Or(p, Or(q, r)), Or(Or(p, q), r)),
    )),
    Law("E5", "Distributive laws", (
        _eq(And(p, Or(q, r)), Or(And(p, q), And(p, r))),
        _eq(Or(p, And(q, r)), And(Or(p, q), Or(p, r))),
    )),
    Law("E6", "Idempotence", (_eq(And(p, p), p), _eq(Or(p, p), p))),
    Law("E7", "Identity laws", (_eq(And(p, TOP), p), _eq(Or(p, BOTTOM), p))),
    Law("E8", "Domination laws", (_eq(And(p, BOTTOM), BOTTOM), _eq(Or(p, TOP), TOP))),
    Law("E9", "Inverse laws", (_eq(And(p, Not(p)), BOTTOM), _eq(Or(p, Not(p)), TOP)), expected_holds=False),
    Law("E10", "Absorption laws", (_eq(And(p, Or(p, q)), p), _eq(Or(p, And(p, q)), p))),
    Law("E11", "Implication law", (_eq(Implies(p, q), Or(Not(p), q)),), expected_holds=False),
    # the tabulated contrapositive is ¬q → ¬p
    Law("E12", "Contrapositive law", (_eq(Implies(p, q), Implies(Not(q), Not(p))),)),
    Law("E13", "Equivalence law", (_eq(Iff(p, q), And(Implies(p, q), Implies(q, p))),)),
    Law("I1", "Modus ponens", (_imp(And(Implies(p, q), p), q),)),
    Law("I2", "Law of syllogism", (_imp(And(Implies(p, q), Implies(q, r)), Implies(p, r)),)),
    Law("I3", "Modus tollens", (_imp(And(Implies(p, q), Not(q)), Not(p)),)),
    Law("I4", "Conjunctive simplification", (_imp(And(p, q), p),)),
    Law("I5", "Disjunctive amplification", (_imp(p, Or(p, q)),)),
    Law("I6", "Disjunctive syllogism", (_imp(And(Or(p, q), Not(q)), p),), expected_holds=False),
    Law("I7", "Proof by contradiction", (_imp(Implies(Not(p), BOTTOM), p),)),
    Law("I8", "Proof by cases", (_imp(And(Implies(p, r), Implies(q, r)), Implies(Or(p, q), r)),)),
)

LAWS_BY_ID = {law.law_id: law for law in LAWS}


@dataclass(frozen=True)
class LawVerdict:
    law: Law
    holds: bool
    counterexamples: tuple  # one tuple of Counterexample per equation

    @property
    def law_id(self):
        return self.law.law_id

    @property
    def matches_expected(self):
        return self.holds == self.law.expected_holds

    def to_dict(self):
        return {
            'law_id': self.law.law_id,
            'name': self.law.name,
            'holds': self.holds,
            'counterexamples': [
                dict(c.to_dict(), equation=index + 1)
                for index, failures in enumerate(self.counterexamples)
                for c in failures
            ],
        }


@dataclass(frozen=True)
class LawReport:
    verdicts: tuple = field(default_factory=tuple)

    def __getitem__(self, law_id):
        for verdict in self.verdicts:
            if verdict.law_id == law_id:
                return verdict
        raise KeyError(law_id)

    @property
    def matches_expected(self):
        return all(v.matches_expected for v in self.verdicts)

    def to_dict(self):
        return [v.to_dict() for v in self.verdicts]


def check_law(law):
    count = atom_count(*(f for eq in law.equations for f in (eq.lhs, eq.rhs)))
    failures = tuple(tuple(counterexamples(eq.lhs, eq.rhs, eq.kind, count)) for eq in law.equations)
    return LawVerdict(law, not any(failures), failures)


def law_suite():
    """
    Check E1-E13 and I1-I8 exhaustively

    Returns:
        LawReport: one verdict per law, with every failing row for the laws that fail
    """
    verdicts = tuple(check_law(law) for law in LAWS)
    for verdict in verdicts:
        if not verdict.matches_expected:
            logger.warning(f"Law {verdict.law_id} verdict {verdict.holds} disagrees with the expected marking")
    logger.info(f"Law suite checked: {sum(v.holds for v in verdicts)}/{len(verdicts)} laws hold")
    return LawReport(verdicts)


def truth_table(formulas, count=None):
    """
    Evaluate formulas on every assignment

    Args:
        formulas (Sequence[Formula]): columns of the table
        count (int): atom id space size (defaults to the formulas' own)

    Returns:
        list[tuple]: (atom_values, formula_values) per row, lexicographic in 0 < ? < 1
    """
    count = atom_count(*formulas) if count is None else count
    rows = []
    for values in assignments(count):
        env = dict(enumerate(values))
        rows.append((values, tuple(f.evaluate(env) for f in formulas)))
    return rows
