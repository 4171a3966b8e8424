"""
Peres-Mermin square: parity constraints from closures and an exhaustive value search
"""
import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from operator import xor

from conjlogic.clifford.gates import CzChoice, TheoryVariant
from conjlogic.knowledge.state import KnowledgeState, closure
from conjlogic.pauli.proposition import Proposition, compatible

logger = logging.getLogger(__name__)

PM_LETTERS = (
    ("ZI", "IZ", "ZZ"),
    ("IX", "XI", "XX"),
    ("ZX", "XZ", "YY"),
)

# (name, cells); the last cell of each context is predicted from the first two
PM_CONTEXTS = tuple(
    [(f"row {r + 1}", tuple((r, c) for c in range(3))) for r in range(3)]
    + [(f"column {c + 1}", tuple((r, c) for r in range(3))) for c in range(3)]
)


@dataclass(frozen=True)
class PmConstraint:
    name: str
    cells: tuple  # (row, column) of the three members
    members: tuple  # the three propositions
    prediction: Proposition  # closure member over the third letter string
    compatible: bool

    @property
    def parity(self):
        """value(a) ⊕ value(b) ⊕ value(c) required by the prediction"""
        return self.prediction.sign

    def satisfied_by(self, values):
        return reduce(xor, (values[r][c] for r, c in self.cells)) == self.parity

    def to_dict(self):
        return {
            'name': self.name,
            'members': [p.to_dict() for p in self.members],
            'prediction': self.prediction.to_dict(),
            'parity': self.parity,
            'compatible': self.compatible,
        }


@dataclass(frozen=True)
class PmReport:
    variant: TheoryVariant
    square: tuple  # 3 x 3 Propositions
    constraints: tuple
    satisfiable: bool
    assignment: tuple = None  # 3 x 3 bits of the first satisfying assignment

    @property
    def parity_witness(self):
        """XOR of all six parities; 1 rules out any 0/1 assignment"""
        return reduce(xor, (c.parity for c in self.constraints), 0)

    def to_dict(self):
        assignment = None
        if self.assignment is not None:
            assignment = {
                self.square[r][c].letters: self.assignment[r][c] for r in range(3) for c in range(3)
            }
        return {
            'variant': self.variant.value,
            'square': [[p.letters for p in row] for row in self.square],
            'constraints': [c.to_dict() for c in self.constraints],
            'parity_witness': self.parity_witness,
            'satisfiable': self.satisfiable,
            'assignment': assignment,
        }


def _context_prediction(a, b, c, variant):
    state = KnowledgeState.from_generators(a.n, [a, b], variant, CzChoice.STANDARD)
    for p in closure(state):
        if p.same_string(c):
            return p
    raise ValueError(f"{a} and {b} do not predict the letter string of {c}")


def _search(constraints, order=None):
    """First assignment in order (default lexicographic) meeting every constraint"""
    if order is None:
        order = itertools.product((0, 1), repeat=9)
    for bits in order:
        values = (bits[0:3], bits[3:6], bits[6:9])
        if all(c.satisfied_by(values) for c in constraints):
            return values
    return None


def pm_square(variant=TheoryVariant.QUANTUM):
    """
    Build the square, derive each context's parity from a closure and search all
    2^9 value assignments

    Args:
        variant (TheoryVariant): theory whose Hadamard decides the last column

    Returns:
        PmReport: constraints, satisfiability and a witness assignment if any
    """
    square = tuple(tuple(Proposition.from_letters(text) for text in row) for row in PM_LETTERS)

    constraints = []
    for name, cells in PM_CONTEXTS:
        members = tuple(square[r][c] for r, c in cells)
        prediction = _context_prediction(*members, variant)
        pairwise = all(compatible(p, q) for p, q in itertools.combinations(members, 2))
        constraints.append(PmConstraint(name, cells, members, prediction, pairwise))
        logger.debug(f"{name}: {members[0]} ∧ {members[1]} ⇒ {prediction}")

    assignment = _search(constraints)
    report = PmReport(variant, square, tuple(constraints), assignment is not None, assignment)
    logger.info(f"PM square ({variant.value}): parity witness {report.parity_witness}, satisfiable {report.satisfiable}")
    return report
