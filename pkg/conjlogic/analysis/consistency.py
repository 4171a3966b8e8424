"""
Two derivations of the ⟨YIY⟩ prediction from ⟨¬YYI,¬IYY⟩, compared under a CZ choice
"""
import logging
from dataclasses import dataclass

from conjlogic.clifford.gates import CzChoice, Gate, TheoryVariant
from conjlogic.clifford.transcript import Transcript
from conjlogic.knowledge.state import KnowledgeState, closure, derive_via
from conjlogic.pauli.proposition import Proposition, negate_prop
from conjlogic.reduction.reducer import reduce_set

logger = logging.getLogger(__name__)

PREMISE_LETTERS = ("YYI", "IYY")
TARGET_LETTERS = "YIY"

# CZ on systems 1-2, 2-3, 1-3, in this order
TRIPLE_CZ_ROUTE = Transcript([Gate.cz(0, 1), Gate.cz(1, 2), Gate.cz(0, 2)])


@dataclass(frozen=True)
class ConsistencyReport:
    cz: CzChoice
    premise: tuple
    reduction: object  # ReductionResult of the premise
    via_reduction: Proposition  # reduce / combine / expand
    via_triple_cz: Proposition  # pulled back through the CZ triple
    derived: tuple
    contradiction_found: bool
    state: KnowledgeState

    def to_dict(self):
        return {
            'cz': self.cz.value,
            'premise': [p.to_dict() for p in self.premise],
            'reduced': [p.to_dict() for p in self.reduction.reduced],
            'via_reduction': self.via_reduction.to_dict(),
            'via_triple_cz': self.via_triple_cz.to_dict(),
            'derived': [p.to_dict() for p in self.derived],
            'contradiction_found': self.contradiction_found,
            'poisoned': self.state.poisoned,
        }


def _pick(props, letters):
    for p in props:
        if p.letters == letters:
            return p
    raise ValueError(f"no derived proposition over {letters}")


def cz_consistency_check(cz=CzChoice.STANDARD):
    """
    Derive the prediction over YIY by the reduction route and by the CZ-triple
    route, and report whether they disagree

    Args:
        cz (CzChoice): CZ choice; the quantum variant is used throughout

    Returns:
        ConsistencyReport: both derived propositions and the (possibly poisoned)
        state left by the comparison
    """
    variant = TheoryVariant.QUANTUM
    premise = tuple(Proposition.from_letters(text, sign=1) for text in PREMISE_LETTERS)
    state = KnowledgeState.from_generators(3, premise, variant, cz)
    reduction = reduce_set(premise, variant, cz)

    via_reduction = _pick(closure(state), TARGET_LETTERS)
    derived_set, state = derive_via(state, TRIPLE_CZ_ROUTE)
    via_triple_cz = _pick(derived_set, TARGET_LETTERS)

    derived = tuple(sorted({via_reduction, via_triple_cz}, key=lambda p: p.sort_key))
    contradiction = any(negate_prop(p) in derived for p in derived)
    if contradiction:
        logger.warning(f"CZ choice {cz.value} derives both {via_reduction} and {via_triple_cz}")
    return ConsistencyReport(
        cz=cz,
        premise=premise,
        reduction=reduction,
        via_reduction=via_reduction,
        via_triple_cz=via_triple_cz,
        derived=derived,
        contradiction_found=contradiction,
        state=state,
    )
