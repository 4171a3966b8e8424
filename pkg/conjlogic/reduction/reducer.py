"""
Clifford reduction of propositions to single-system form

Each proposition is brought to a single ⟨±X⟩ at its pivot, the first of its
nontrivial positions not already claimed by an earlier proposition:

    phase      S on every Y of the unclaimed support        (Y -> ¬X)
    hadamard   H on the pivot if it holds Z, and on every
               other X of the unclaimed support              (X <-> Z)
    correlate  CZ(pivot, j) for the rest of the support      (X Z -> X I)
    rewrite    CNOT(pivot, m) for every earlier pivot m
               where the proposition still holds X           (X X -> X I)

Systems are never permuted. The gates only touch unclaimed positions, and the
rewrite leaves an earlier ⟨X⟩ at m unchanged, so rows already reduced stay put
and later layers can skip them.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from conjlogic.clifford.gates import (
    CzChoice,
    Gate,
    GateKind,
    TheoryVariant,
    apply_cz_fanout,
    apply_single_layer,
)
from conjlogic.clifford.transcript import Transcript, apply_transcript_many
from conjlogic.errors import (
    DependentSetError,
    DimensionMismatchError,
    IncompatiblePairError,
    TrivialPropositionError,
)
from conjlogic.pauli.proposition import Proposition, PauliLetter
from conjlogic.pauli.tableau import PauliTableau

logger = logging.getLogger(__name__)


class Relation(Enum):
    COMPATIBLE_DISTINCT = "compatible-distinct-systems"
    INCOMPATIBLE_SAME = "incompatible-same-system"
    SINGLE = "single"


@dataclass(frozen=True)
class ReductionStage:
    label: str
    gates: Transcript
    images: tuple  # every proposition after this segment

    def to_dict(self):
        return {
            'label': self.label,
            'gates': self.gates.to_list(),
            'images': [p.to_dict() for p in self.images],
        }


@dataclass(frozen=True)
class ReductionResult:
    originals: tuple
    transcript: Transcript
    reduced: tuple
    relation: Relation
    pivots: tuple  # 0-based system of each reduced proposition's letter
    stages: tuple = field(default=())

    def to_dict(self):
        return {
            'relation': self.relation.value,
            'transcript': self.transcript.to_list(),
            'reduced': [p.to_dict() for p in self.reduced],
            'pivots': [t + 1 for t in self.pivots],
            'stages': [stage.to_dict() for stage in self.stages],
        }


class _Reduction:
    """Working tableau, transcript and stage log of one reduction"""

    def __init__(self, props, variant, cz, record_stages):
        self.props = tuple(props)
        self.tab = PauliTableau.from_props(self.props)
        self.variant = variant
        self.cz = cz
        self.record_stages = record_stages
        self.steps = []
        self.stages = []
        self.pivots = []
        self.claimed = np.zeros(self.tab.n, dtype=bool)

    def apply(self, label, layers, start):
        """
        Run gate layers on rows start.. and log them as one stage

        Args:
            label (str): stage name
            layers (list[tuple]): (kind, anchor, targets); anchor is the CZ
                control and None for single-system kinds
            start (int): first row touched
        """
        tail = self.tab.tail(start)
        gates = []
        for kind, anchor, targets in layers:
            if not targets:
                continue
            if kind is GateKind.CZ:
                apply_cz_fanout(tail, anchor, targets, self.cz)
                gates.extend(Gate(kind, (anchor, j)) for j in targets)
            else:
                apply_single_layer(tail, kind, targets, self.variant)
                gates.extend(Gate(kind, (j,)) for j in targets)
        if not gates:
            return
        self.steps.extend(gates)
        if self.record_stages:
            self.stages.append(ReductionStage(label, Transcript(gates), tuple(self.tab.to_props())))
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"{label}: {Transcript(gates).render()}")

    def unclaimed_support(self, k):
        return np.flatnonzero((self.tab.x[k] | self.tab.z[k]).astype(bool) & ~self.claimed)

    def localize(self, k, support):
        """Bring row k to X at support[0] and I on the rest of support"""
        x, z = self.tab.x[k], self.tab.z[k]
        pivot = int(support[0])

        phase = support[(x[support] & z[support]).astype(bool)]
        self.apply("phase", [(GateKind.S, None, phase.tolist())], k)

        # row views: x and z now hold the post-phase bits
        flip = np.where(support == pivot, z[support], x[support]).astype(bool)
        self.apply("hadamard", [(GateKind.H, None, support[flip].tolist())], k)

        self.apply("correlate", [(GateKind.CZ, pivot, support[1:].tolist())], k)
        return pivot

    def rewrite(self, k, pivot, targets):
        """CNOT(pivot, m) for all m in targets, as H layer, CZ fan-out, H layer"""
        targets = list(targets)
        hadamard = (GateKind.H, None, targets)
        self.apply("rewrite", [hadamard, (GateKind.CZ, pivot, targets), hadamard], k)

    def claim(self, pivot):
        self.pivots.append(pivot)
        self.claimed[pivot] = True

    def result(self, relation):
        return ReductionResult(
            originals=self.props,
            transcript=Transcript(self.steps),
            reduced=tuple(self.tab.to_props()),
            relation=relation,
            pivots=tuple(self.pivots),
            stages=tuple(self.stages),
        )


def _check_inputs(props):
    for index, p in enumerate(props):
        if p.n != props[0].n:
            raise DimensionMismatchError(f"proposition {index + 1} has {p.n} systems, expected {props[0].n}")
        if p.is_trivial:
            raise TrivialPropositionError(f"proposition {index + 1} ({p}) is trivial")


def reduce_single(p, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, record_stages=True):
    """
    Reduce one proposition to ⟨±X⟩ at its first nontrivial position

    Args:
        p (Proposition): nontrivial proposition
        variant (TheoryVariant): theory variant
        cz (CzChoice): CZ choice
        record_stages (bool): keep the images after every gate layer

    Returns:
        ReductionResult: transcript of S, H and CZ gates and the reduced form
    """
    _check_inputs([p])
    work = _Reduction([p], variant, cz, record_stages)
    work.claim(work.localize(0, work.unclaimed_support(0)))
    return work.result(Relation.SINGLE)


def reduce_pair(p, q, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, record_stages=True):
    """
    Reduce two propositions to single-system form

    p goes to ⟨±X⟩ at its pivot t1. With L the letter q then holds at t1:
      * q has nothing else: L is Y or Z, an incompatible pair on system t1
      * L = I: q reduces on its remaining support to ⟨±X⟩ at t2
      * L = X: as above, then CNOT(t2, t1) clears the X at t1
      * L = Y or Z: as above, then H on t1 and t2 and CZ(t1, t2) move both onto
        t1, giving ⟨±Z⟩ and ⟨±X⟩ or ⟨±Y⟩ there

    Returns:
        ReductionResult: relation compatible-distinct-systems or
        incompatible-same-system
    """
    _check_inputs([p, q])
    if p.same_string(q):
        raise DependentSetError(1, f"{q} is ±{p}")

    work = _Reduction([p, q], variant, cz, record_stages)
    t1 = work.localize(0, work.unclaimed_support(0))
    work.claim(t1)
    letter = PauliLetter.from_bits(work.tab.x[1, t1], work.tab.z[1, t1])

    rest = work.unclaimed_support(1)
    if rest.size == 0:
        work.pivots.append(t1)
        return work.result(Relation.INCOMPATIBLE_SAME)

    t2 = work.localize(1, rest)
    if letter is PauliLetter.X:
        work.rewrite(1, t2, [t1])
    elif letter is not PauliLetter.I:
        work.apply("merge", [(GateKind.H, None, sorted((t1, t2))), (GateKind.CZ, t1, [t2])], 0)
        work.pivots.append(t1)
        return work.result(Relation.INCOMPATIBLE_SAME)
    work.claim(t2)
    return work.result(Relation.COMPATIBLE_DISTINCT)


def reduce_set(props, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, record_stages=True):
    """
    Jointly reduce pairwise compatible, independent propositions

    Proposition k ends as ⟨±X⟩ at pivots[k] with identities elsewhere; all
    share one transcript. Propositions are processed in the given order.

    Args:
        props (Sequence[Proposition]): the set, all with the same system count
        variant (TheoryVariant): theory variant
        cz (CzChoice): CZ choice
        record_stages (bool): keep the images after every gate layer

    Returns:
        ReductionResult: relation single for one proposition, else
        compatible-distinct-systems

    Raises:
        IncompatiblePairError: proposition k holds Z or Y at an earlier pivot
        DependentSetError: proposition k lies in the span of the earlier ones
    """
    props = list(props)
    if not props:
        return ReductionResult((), Transcript(), (), Relation.SINGLE, ())
    _check_inputs(props)

    work = _Reduction(props, variant, cz, record_stages)
    for k in range(len(props)):
        x, z = work.tab.x[k], work.tab.z[k]
        held = []
        for m, pivot in enumerate(work.pivots):
            if z[pivot]:
                raise IncompatiblePairError(m, k)
            if x[pivot]:
                held.append(pivot)
        rest = work.unclaimed_support(k)
        if rest.size == 0:
            raise DependentSetError(k)
        pivot = work.localize(k, rest)
        work.rewrite(k, pivot, held)
        work.claim(pivot)

    logger.info(f"Reduced {len(props)} proposition(s) on {props[0].n} systems with {len(work.steps)} gates")
    relation = Relation.SINGLE if len(props) == 1 else Relation.COMPATIBLE_DISTINCT
    return work.result(relation)


def augment(props, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, n=None):
    """
    Extend a compatible independent set to n propositions

    The set is reduced, ⟨X⟩ is placed on every system no pivot claims, and those
    fresh propositions are expanded back through the inverted transcript.

    Returns:
        list[Proposition]: the input set followed by the expansions
    """
    props = list(props)
    if n is None:
        if not props:
            raise DimensionMismatchError("system count needed to augment an empty set")
        n = props[0].n
    result = reduce_set(props, variant, cz, record_stages=False)
    free = sorted(set(range(n)) - set(result.pivots))
    fresh = [Proposition.single(n, t, PauliLetter.X) for t in free]
    expanded = apply_transcript_many(fresh, result.transcript.inverse(), variant, cz, n=n)
    return props + expanded
