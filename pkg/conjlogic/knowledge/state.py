"""
Knowledge states: conjunctions of compatible independent propositions and what they predict
"""
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from conjlogic.clifford.gates import CzChoice, TheoryVariant
from conjlogic.clifford.transcript import Transcript, apply_transcript, apply_transcript_many, apply_transcript_tableau
from conjlogic.config import MAX_CLOSURE_GENERATORS
from conjlogic.errors import (
    ClosureLimitError,
    ContradictionError,
    DimensionMismatchError,
    IncompatibleAssertionError,
    TrivialPropositionError,
)
from conjlogic.kernel.truth import TruthValue
from conjlogic.pauli.proposition import Proposition, compatible, negate_prop
from conjlogic.pauli.tableau import PauliTableau
from conjlogic.reduction.reducer import reduce_set
from conjlogic.utils.gf2 import gf2_rank, pack_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KnowledgeState:
    """
    Generators of a conjunction plus its lazily computed reduction frame and closure

    A poisoned state has derived both some proposition and its negation; the
    offending propositions are kept in conflicts.
    """

    n: int
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    generators: tuple = ()
    poisoned: bool = False
    conflicts: tuple = field(default=())

    @classmethod
    def empty(cls, n, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD):
        return cls(n, variant, cz)

    @classmethod
    def from_generators(cls, n, generators, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD):
        """Assert every generator in order, starting from the empty state"""
        state = cls.empty(n, variant, cz)
        for p in generators:
            state = assert_prop(state, p)
        return state

    @cached_property
    def frame(self):
        """Joint reduction of the generators (transcript, single-X forms, pivots)"""
        return reduce_set(self.generators, self.variant, self.cz, record_stages=False)

    @cached_property
    def _closure(self):
        return _expand_closure(self)

    def closure(self):
        return closure(self)

    def predicts(self, q):
        return predicts(self, q)

    def with_generators(self, generators):
        return replace(self, generators=tuple(generators))

    def to_dict(self):
        data = {
            'n': self.n,
            'variant': self.variant.value,
            'cz': self.cz.value,
            'generators': [p.to_dict() for p in self.generators],
        }
        if self.poisoned:
            data['poisoned'] = True
            data['conflicts'] = [p.to_dict() for p in self.conflicts]
        return data

    @classmethod
    def from_dict(cls, data):
        variant = TheoryVariant(data.get('variant', TheoryVariant.QUANTUM.value))
        cz = CzChoice(data.get('cz', CzChoice.STANDARD.value))
        generators = [Proposition.from_dict(item) for item in data.get('generators', [])]
        state = cls.from_generators(data['n'], generators, variant, cz)
        if data.get('poisoned'):
            conflicts = tuple(Proposition.from_dict(item) for item in data.get('conflicts', []))
            state = replace(state, poisoned=True, conflicts=conflicts)
        return state


def check_dims(s, p):
    if p.n != s.n:
        raise DimensionMismatchError(f"{p} has {p.n} systems, the state has {s.n}")


def _expand_closure(s):
    k = len(s.generators)
    if k > MAX_CLOSURE_GENERATORS:
        raise ClosureLimitError(f"closure of {k} generators has 2^{k} members (limit 2^{MAX_CLOSURE_GENERATORS})")
    frame = s.frame
    signs = np.array([p.sign for p in frame.reduced], dtype=np.uint8)

    # every subset of reduced generators: X on the chosen pivots, signs XORed
    masks = np.arange(2 ** k, dtype=np.int64)
    chosen = ((masks[:, None] >> np.arange(k)) & 1).astype(np.uint8)
    tab = PauliTableau.empty(2 ** k, s.n)
    if k:
        tab.x[:, list(frame.pivots)] = chosen
        tab.sign[:] = np.bitwise_xor.reduce(chosen & signs, axis=1)

    apply_transcript_tableau(tab, frame.transcript.inverse(), s.variant, s.cz)
    logger.info(f"Closure of {k} generator(s) on {s.n} systems: {len(tab)} propositions")
    return frozenset(tab.to_props())


def closure(s):
    """
    Every proposition the state predicts

    The generators are reduced jointly to single ⟨±X⟩ forms; each subset of those
    combines into X on the union of its pivots with the XOR of its signs; each
    combination is expanded back through the inverted transcript.

    Args:
        s (KnowledgeState): state to close

    Returns:
        frozenset[Proposition]: 2^k propositions including ⟨I…I⟩
    """
    return s._closure


def sorted_closure(s):
    """Closure in lexicographic letter order, sign 0 before 1"""
    return sorted(s._closure, key=lambda p: p.sort_key)


def predicts(s, q):
    """
    Truth value the state assigns to q

    q is carried into the reduced frame; it is determined exactly when its image
    is a product of X's on pivots, and then it is true when the image sign equals
    the XOR of those pivots' reduced signs.

    Args:
        s (KnowledgeState): the state
        q (Proposition): query with the state's system count

    Returns:
        TruthValue: 1 if q is predicted, 0 if ¬q is, ? otherwise
    """
    check_dims(s, q)
    if q.is_trivial:
        return TruthValue.from_bool(q.sign == 0)
    if not s.generators:
        return TruthValue.INDETERMINATE

    frame = s.frame
    image = apply_transcript(q, frame.transcript, s.variant, s.cz)
    if image.zbits.any():
        return TruthValue.INDETERMINATE
    x = image.x_array()
    pivots = np.array(frame.pivots, dtype=np.intp)
    outside = x.copy()
    outside[pivots] = 0
    if outside.any():
        return TruthValue.INDETERMINATE
    expected = 0
    for reduced, pivot in zip(frame.reduced, frame.pivots):
        if x[pivot]:
            expected ^= reduced.sign
    return TruthValue.from_bool(image.sign == expected)


def assert_prop(s, p):
    """
    Add p to the conjunction

    Returns s itself when p is already predicted.

    Raises:
        ContradictionError: the state predicts ¬p, or is poisoned
        IncompatibleAssertionError: p clashes with a generator (measure instead)
    """
    check_dims(s, p)
    if p.is_trivial:
        raise TrivialPropositionError(f"cannot assert {p}")
    if s.poisoned:
        raise ContradictionError("the state is poisoned by a contradiction")
    value = predicts(s, p)
    if value is TruthValue.TRUE:
        return s
    if value is TruthValue.FALSE:
        raise ContradictionError(f"{p} contradicts the state, which predicts {negate_prop(p)}")
    for g in s.generators:
        if not compatible(g, p):
            raise IncompatibleAssertionError(f"{p} is incompatible with {g}; measure it instead")
    logger.debug(f"Asserted {p}")
    return s.with_generators(s.generators + (p,))


def independent(props):
    """
    GF(2) linear independence of the symplectic (x|z) rows, signs ignored

    Args:
        props (Sequence[Proposition]): propositions with equal system count

    Returns:
        bool: True when the stacked rows have full rank
    """
    props = list(props)
    if not props:
        return True
    n = props[0].n
    for p in props:
        if p.n != n:
            raise DimensionMismatchError(f"{p} has {p.n} systems, expected {n}")
    rows = [pack_bits(np.concatenate([p.x_array(), p.z_array()])) for p in props]
    return gf2_rank(rows) == len(props)


def derive_via(s, route):
    """
    Predictions reached by reading the state as the image of another under route

    The generators are pulled back through the inverse of route, that state is
    closed, and its closure is pushed forward through route. A derived
    proposition whose negation the state itself predicts poisons the result.

    Args:
        s (KnowledgeState): the premise
        route (Transcript): transformation the premise is viewed through

    Returns:
        tuple: (derived frozenset of Proposition, resulting KnowledgeState)
    """
    route = Transcript(route)
    preimage = apply_transcript_many(s.generators, route.inverse(), s.variant, s.cz, n=s.n)
    pulled = KnowledgeState.from_generators(s.n, preimage, s.variant, s.cz)
    derived = frozenset(apply_transcript_many(closure(pulled), route, s.variant, s.cz, n=s.n))

    conflicts = tuple(sorted(
        (p for p in derived if predicts(s, p) is TruthValue.FALSE),
        key=lambda p: p.sort_key,
    ))
    if not conflicts:
        return derived, s
    logger.warning(f"Derivation via {route.render()} contradicts the state on {len(conflicts)} proposition(s)")
    poisoned = KnowledgeState(s.n, s.variant, s.cz, s.generators, True, s.conflicts + conflicts)
    return derived, poisoned
