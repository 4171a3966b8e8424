"""
Timing of reduce_set and closure on random valid states
"""
import logging
import time
from dataclasses import dataclass

import numpy as np

from conjlogic.clifford.gates import CzChoice, Gate, GateKind, TheoryVariant
from conjlogic.clifford.transcript import Transcript, apply_transcript_tableau
from conjlogic.config import BENCH_MAX_CLOSURE_GENERATORS, BENCH_SCRAMBLE_ROUNDS
from conjlogic.errors import UsageError
from conjlogic.knowledge.state import KnowledgeState, closure
from conjlogic.pauli.proposition import weight
from conjlogic.pauli.tableau import PauliTableau
from conjlogic.reduction.reducer import reduce_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchReport:
    n: int
    generators: int
    repetitions: int
    variant: TheoryVariant
    cz: CzChoice
    reduce_median: float  # seconds
    closure_median: float  # seconds, None when closure was not timed
    gates: int
    throughput: float  # gate-row updates per second during reduction
    support: float = 0.0  # median generator weight
    dense: bool = False

    def to_dict(self):
        return {
            'n': self.n,
            'generators': self.generators,
            'repetitions': self.repetitions,
            'variant': self.variant.value,
            'cz': self.cz.value,
            'reduce_median_s': self.reduce_median,
            'closure_median_s': self.closure_median,
            'gates': self.gates,
            'throughput': self.throughput,
            'support': self.support,
            'dense': self.dense,
        }


def scramble_transcript(n, rng, rounds=BENCH_SCRAMBLE_ROUNDS):
    """Random layers of S, H and disjoint CZ pairs"""
    steps = []
    for _ in range(rounds):
        for kind in (GateKind.S, GateKind.H):
            chosen = np.flatnonzero(rng.integers(2, size=n))
            steps.extend(Gate.single(kind, int(i)) for i in chosen)
        order = rng.permutation(n)
        steps.extend(Gate.cz(int(order[i]), int(order[i + 1])) for i in range(0, n - 1, 2))
    return Transcript(steps)


def spread_transcript(pivots, n, rng):
    """CZ from each pivot to a random half of the other systems"""
    steps = []
    for p in pivots:
        targets = np.flatnonzero(rng.integers(2, size=n))
        steps.extend(Gate.cz(int(p), int(t)) for t in targets if t != p)
    return Transcript(steps)


def random_generators(n, k, rng, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, dense=False):
    """
    k compatible independent propositions on n systems: single ⟨±X⟩ on random
    distinct systems, carried through a random transcript

    With dense set, each pivot first fans CZs out to about half of the systems,
    so the generators end up with support of order n instead of at most
    2^BENCH_SCRAMBLE_ROUNDS.
    """
    if k > n:
        raise UsageError(f"cannot place {k} independent generators on {n} systems")
    tab = PauliTableau.empty(k, n)
    if k:
        pivots = rng.choice(n, size=k, replace=False)
        tab.x[np.arange(k), pivots] = 1
        tab.sign[:] = rng.integers(2, size=k)
        if dense:
            apply_transcript_tableau(tab, spread_transcript(pivots, n, rng), variant, cz)
    apply_transcript_tableau(tab, scramble_transcript(n, rng), variant, cz)
    return tab.to_props()


def run_bench(n, k, repetitions, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, seed=0, dense=False):
    """
    Median wall time of reduce_set (and of closure for small k) over repetitions

    Args:
        n (int): system count
        k (int): generators per state, at most n
        repetitions (int): states generated and timed
        variant (TheoryVariant): theory variant
        cz (CzChoice): CZ choice
        seed (int): seed of the state generator
        dense (bool): generate generators with support of order n

    Returns:
        BenchReport: medians and reduction throughput
    """
    if repetitions < 1:
        raise UsageError("repetitions must be at least 1")
    if seed < 0:
        raise UsageError(f"seed must be non-negative, got {seed}")
    rng = np.random.default_rng(seed)
    timed_closure = k <= BENCH_MAX_CLOSURE_GENERATORS
    reduce_times, closure_times, gate_counts, weights = [], [], [], []

    for rep in range(repetitions):
        props = random_generators(n, k, rng, variant, cz, dense)
        weights.extend(weight(p) for p in props)

        start = time.perf_counter()
        result = reduce_set(props, variant, cz, record_stages=False)
        reduce_times.append(time.perf_counter() - start)
        gate_counts.append(len(result.transcript))

        if timed_closure:
            state = KnowledgeState(n, variant, cz, tuple(props))
            start = time.perf_counter()
            closure(state)
            closure_times.append(time.perf_counter() - start)
        logger.info(f"Bench repetition {rep + 1}/{repetitions}: reduce {reduce_times[-1] * 1e3:.3f} ms")

    reduce_median = float(np.median(reduce_times))
    gates = int(np.median(gate_counts))
    throughput = gates * k / reduce_median if reduce_median > 0 else 0.0
    return BenchReport(
        n=n,
        generators=k,
        repetitions=repetitions,
        variant=variant,
        cz=cz,
        reduce_median=reduce_median,
        closure_median=float(np.median(closure_times)) if closure_times else None,
        gates=gates,
        throughput=float(throughput),
        support=float(np.median(weights)) if weights else 0.0,
        dense=dense,
    )
