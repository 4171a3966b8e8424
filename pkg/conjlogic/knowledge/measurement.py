"""
Measurement: fixing the truth value of a question and forgetting what it disturbs
"""
import logging
from dataclasses import dataclass

from conjlogic.errors import ContradictionError, MissingSeedError, TrivialPropositionError
from conjlogic.kernel.truth import TruthValue
from conjlogic.knowledge.state import KnowledgeState, predicts, check_dims
from conjlogic.pauli.proposition import compatible

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementRecord:
    measured: object  # the question, sign 0
    outcome: int
    resulting_prop: object  # the question with sign = outcome
    predicted: bool  # outcome forced by the state

    def to_dict(self):
        return {
            'measured': self.measured.to_dict(),
            'outcome': self.outcome,
            'resulting_prop': self.resulting_prop.to_dict(),
            'predicted': self.predicted,
        }


def measure(s, q, rng=None):
    """
    Ask the question q of the state

    A predicted outcome is returned and the state is left as it is. Otherwise the
    outcome is a fair coin from rng and the new generators are those compatible
    with q, plus q carrying the outcome as its sign.

    Args:
        s (KnowledgeState): state before the measurement
        q (Proposition): the question; its sign is ignored
        rng (np.random.Generator): seeded source, needed only for an
            unpredicted question

    Returns:
        tuple: (MeasurementRecord, KnowledgeState)

    Raises:
        ContradictionError: the state is poisoned
        MissingSeedError: the outcome is not predicted and rng is None
    """
    check_dims(s, q)
    if s.poisoned:
        raise ContradictionError(f"cannot measure {q}: the state is poisoned by a contradiction")
    if q.is_trivial:
        raise TrivialPropositionError(f"{q} asks nothing of any system")
    question = q.with_sign(0)

    value = predicts(s, question)
    if value.is_determinate:
        outcome = 0 if value is TruthValue.TRUE else 1
        record = MeasurementRecord(question, outcome, question.with_sign(outcome), True)
        logger.debug(f"Measured {question}: predicted outcome {outcome}")
        return record, s

    if rng is None:
        raise MissingSeedError(f"measuring {question} needs a seed: the state does not predict it")
    outcome = int(rng.integers(2))
    result = question.with_sign(outcome)
    kept = tuple(g for g in s.generators if compatible(g, question))
    dropped = len(s.generators) - len(kept)
    logger.info(f"Measured {question}: outcome {outcome}, {dropped} incompatible generator(s) dropped")
    state = KnowledgeState(s.n, s.variant, s.cz, kept + (result,))
    return MeasurementRecord(question, outcome, result, False), state


def measure_sequence(s, questions, rng=None):
    """Measure questions in order; returns the records and the final state"""
    records = []
    for q in questions:
        record, s = measure(s, q, rng)
        records.append(record)
    return records, s
