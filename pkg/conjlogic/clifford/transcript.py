"""
Transcripts: ordered, invertible gate sequences and their text form
"""
import re
from dataclasses import dataclass
from functools import cached_property

from conjlogic.clifford.gates import (
    CzChoice,
    Gate,
    GateKind,
    TheoryVariant,
    apply_cz_fanout,
    apply_single_layer,
    check_shape,
    check_targets,
)
from conjlogic.errors import GateError, TranscriptParseError
from conjlogic.pauli.tableau import PauliTableau


@dataclass(frozen=True)
class Transcript:
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(self.steps))

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Transcript(self.steps[index])
        return self.steps[index]

    def __add__(self, other):
        return Transcript(self.steps + tuple(other))

    def inverse(self):
        return invert_transcript(self)

    def render(self):
        return format_transcript(self)

    def to_list(self):
        return [gate.to_dict() for gate in self.steps]

    @classmethod
    def from_list(cls, data):
        steps = []
        for item in data:
            try:
                kind = GateKind(item['kind'])
            except (KeyError, ValueError):
                raise TranscriptParseError("unknown gate kind", str(item)) from None
            targets = [t - 1 for t in item['targets']]
            steps.append(Gate.cz(*targets) if kind is GateKind.CZ else Gate.single(kind, *targets))
        return cls(steps)

    @cached_property
    def span(self):
        """Systems needed: highest target + 1 (0 for the empty transcript)"""
        return max((check_shape(gate) + 1 for gate in self.steps), default=0)

    def layers(self):
        """
        Consecutive steps grouped into batches

        Single-system gates of one kind on distinct systems form a layer, and CZ
        gates sharing a system form a fan-out around it.

        Returns:
            list[tuple]: (kind, anchor, targets) where anchor is the fan-out
            control for CZ and None otherwise
        """
        return self._layers

    @cached_property
    def _layers(self):
        layers = []
        kind, anchor, targets = None, None, []
        for gate in self.steps:
            if gate.kind is GateKind.CZ:
                i, j = gate.targets
                if kind is GateKind.CZ and anchor in gate.targets:
                    partner = j if i == anchor else i
                    if partner not in targets:
                        targets.append(partner)
                        continue
            elif gate.kind is kind and gate.targets[0] not in targets:
                targets.append(gate.targets[0])
                continue
            if kind is not None:
                layers.append((kind, anchor, tuple(targets)))
            kind = gate.kind
            if kind is GateKind.CZ:
                anchor, targets = gate.targets[0], [gate.targets[1]]
            else:
                anchor, targets = None, [gate.targets[0]]
        if kind is not None:
            layers.append((kind, anchor, tuple(targets)))
        return layers


def invert_transcript(t):
    """Reversed order, S and Sinv swapped; every other kind is its own inverse"""
    return Transcript(gate.inverse() for gate in reversed(t.steps))


def cnot(i, j):
    """CNOT with control i and target j (0-based) as H@j, CZ(i,j), H@j"""
    if i == j:
        raise GateError(f"CNOT needs two distinct systems, got ({i + 1},{j + 1})")
    return Transcript([Gate.single(GateKind.H, j), Gate.cz(i, j), Gate.single(GateKind.H, j)])


def apply_transcript_tableau(tab, t, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD):
    """
    Apply a transcript to every row of a tableau, in place, layer by layer

    Args:
        tab (PauliTableau): rows to transform
        t (Transcript): gates in application order
        variant (TheoryVariant): theory variant
        cz (CzChoice): CZ choice

    Returns:
        PauliTableau: the same tableau object
    """
    if t.span > tab.n:
        for gate in t:
            check_targets(gate, tab.n)
    for kind, anchor, targets in t.layers():
        if kind is GateKind.CZ:
            apply_cz_fanout(tab, anchor, targets, cz)
        else:
            apply_single_layer(tab, kind, targets, variant)
    return tab


def apply_transcript_many(props, t, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD, n=None):
    tab = PauliTableau.from_props(props, n)
    return apply_transcript_tableau(tab, t, variant, cz).to_props()


def apply_transcript(p, t, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD):
    """
    Left-to-right fold of apply_gate over t, evaluated on a one-row tableau

    Args:
        p (Proposition): proposition to transform
        t (Transcript): gates in application order
        variant (TheoryVariant): theory variant
        cz (CzChoice): CZ choice

    Returns:
        Proposition: image of p
    """
    tab = PauliTableau.from_props([p])
    return apply_transcript_tableau(tab, t, variant, cz).row(0)


# =============================================================================
# TEXT FORM
# =============================================================================

_SINGLE_TOKENS = {
    "X": GateKind.FLIP_X,
    "FlipX": GateKind.FLIP_X,
    "Y": GateKind.FLIP_Y,
    "FlipY": GateKind.FLIP_Y,
    "Z": GateKind.FLIP_Z,
    "FlipZ": GateKind.FLIP_Z,
    "S": GateKind.S,
    "Sinv": GateKind.SINV,
    "H": GateKind.H,
}

_SINGLE_RE = re.compile(r"^(?P<token>[A-Za-z]+)\s*@\s*(?P<index>\d+)$")
_PAIR_RE = re.compile(r"^(?P<token>CZ|CNOT)\s*@\s*\(\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\)$")


def _index(text, step):
    value = int(text)
    if value < 1:
        raise TranscriptParseError("system indices start at 1", step)
    return value - 1


def parse_transcript(text):
    """
    Parse "S@2; H@1; CZ@(1,2)" (1-based indices) into a Transcript

    Tokens: X, Y, Z (flips), S, Sinv, H, CZ@(i,j) and CNOT@(i,j), which expands
    to H@j; CZ@(i,j); H@j.
    """
    steps = []
    for raw in text.split(";"):
        step = raw.strip()
        if not step:
            continue
        pair = _PAIR_RE.match(step)
        if pair:
            i, j = _index(pair['i'], step), _index(pair['j'], step)
            if i == j:
                raise TranscriptParseError("two-system gate on a single system", step)
            if pair['token'] == "CZ":
                steps.append(Gate.cz(i, j))
            else:
                steps.extend(cnot(i, j))
            continue
        single = _SINGLE_RE.match(step)
        if single is None or single['token'] not in _SINGLE_TOKENS:
            raise TranscriptParseError("malformed step", step)
        steps.append(Gate.single(_SINGLE_TOKENS[single['token']], _index(single['index'], step)))
    return Transcript(steps)


def format_transcript(t):
    return "; ".join(gate.render() for gate in t)
