"""
Gate rules acting on propositions, single and batched

Every rule is written over the bit algebra only (^, &), so the same code runs
on Python ints for one position and on uint8 columns of a tableau.
"""
from enum import Enum
from typing import NamedTuple

import numpy as np

from conjlogic.errors import GateError
from conjlogic.pauli.proposition import Proposition


class TheoryVariant(Enum):
    QUANTUM = "quantum"
    SPEKKENS_TOY = "toy"


class CzChoice(Enum):
    STANDARD = "standard"  # XX -> YY
    TILDE = "tilde"  # XX -> ¬YY


class GateKind(Enum):
    FLIP_X = "FlipX"
    FLIP_Y = "FlipY"
    FLIP_Z = "FlipZ"
    S = "S"
    SINV = "Sinv"
    H = "H"
    CZ = "CZ"

    @property
    def token(self):
        """Name used in transcript text"""
        return _TOKENS[self]

    @property
    def arity(self):
        return 2 if self is GateKind.CZ else 1

    @property
    def inverse(self):
        if self is GateKind.S:
            return GateKind.SINV
        if self is GateKind.SINV:
            return GateKind.S
        return self


_TOKENS = {
    GateKind.FLIP_X: "X",
    GateKind.FLIP_Y: "Y",
    GateKind.FLIP_Z: "Z",
    GateKind.S: "S",
    GateKind.SINV: "Sinv",
    GateKind.H: "H",
    GateKind.CZ: "CZ",
}


class Gate(NamedTuple):
    kind: GateKind
    targets: tuple  # 0-based

    @classmethod
    def single(cls, kind, index):
        if kind is GateKind.CZ:
            raise GateError("CZ acts on two systems")
        if index < 0:
            raise GateError(f"negative target {index}")
        return cls(kind, (index,))

    @classmethod
    def cz(cls, i, j):
        if i == j:
            raise GateError(f"CZ needs two distinct systems, got ({i + 1},{j + 1})")
        if i < 0 or j < 0:
            raise GateError(f"negative target in CZ({i}, {j})")
        return cls(GateKind.CZ, (i, j))

    def inverse(self):
        return Gate(self.kind.inverse, self.targets)

    def render(self):
        """1-based DSL form, e.g. S@2 or CZ@(1,2)"""
        if self.kind is GateKind.CZ:
            i, j = self.targets
            return f"CZ@({i + 1},{j + 1})"
        return f"{self.kind.token}@{self.targets[0] + 1}"

    def to_dict(self):
        return {'kind': self.kind.value, 'targets': [t + 1 for t in self.targets]}


def check_shape(gate):
    """Arity, non-negative targets and distinct CZ systems; returns the highest target"""
    if len(gate.targets) != gate.kind.arity:
        raise GateError(f"{gate.kind.value} takes {gate.kind.arity} target(s), got {len(gate.targets)}")
    if min(gate.targets) < 0:
        raise GateError(f"negative target in {gate.kind.value}{gate.targets}")
    if gate.kind is GateKind.CZ and gate.targets[0] == gate.targets[1]:
        raise GateError(f"{gate.render()} needs two distinct systems")
    return max(gate.targets)


def check_targets(gate, n):
    if check_shape(gate) >= n:
        raise GateError(f"{gate.render()} targets a system outside 1..{n}")


# =============================================================================
# RULES
# =============================================================================

def single_rule(kind, variant, x, z):
    """
    Sign change and new bits of one position under a single-system gate

    Args:
        kind (GateKind): any kind except CZ
        variant (TheoryVariant): selects the S and H sign rules
        x, z: bit(s) of the position (int or uint8 array)

    Returns:
        tuple: (sign delta, new x, new z)
    """
    quantum = variant is TheoryVariant.QUANTUM
    if kind is GateKind.FLIP_X:
        return z, x, z
    if kind is GateKind.FLIP_Y:
        return x ^ z, x, z
    if kind is GateKind.FLIP_Z:
        return x, x, z
    if kind is GateKind.S or kind is GateKind.SINV:
        delta = (x & z) if quantum else z
        if kind is GateKind.SINV:
            delta = delta ^ x
        return delta, x, z ^ x
    if kind is GateKind.H:
        return ((x & z) if quantum else x & 0), z, x
    raise GateError(f"{kind.value} is not a single-system gate")


def cz_rule(cz, xi, zi, xj, zj):
    """(sign delta, new zi, new zj) for CZ on a pair; x bits are unchanged"""
    f = zi ^ zj
    if cz is CzChoice.TILDE:
        f = f ^ 1
    return xi & xj & f, zi ^ xj, zj ^ xi


def apply_gate(p, gate, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD):
    """
    Image of a proposition under one gate (out of place)

    Args:
        p (Proposition): proposition acted on
        gate (Gate): gate with 0-based targets
        variant (TheoryVariant): theory whose S/H sign rules apply
        cz (CzChoice): standard or tilde CZ

    Returns:
        Proposition: the transformed proposition
    """
    check_targets(gate, p.n)
    x = p.x_array()
    z = p.z_array()
    sign = p.sign
    if gate.kind is GateKind.CZ:
        i, j = gate.targets
        delta, z[i], z[j] = cz_rule(cz, int(x[i]), int(z[i]), int(x[j]), int(z[j]))
    else:
        i = gate.targets[0]
        delta, x[i], z[i] = single_rule(gate.kind, variant, int(x[i]), int(z[i]))
    return Proposition.from_bits(x, z, sign ^ delta)


# =============================================================================
# BATCH LAYERS (in place on a tableau)
# =============================================================================

def apply_single_layer(tab, kind, targets, variant):
    """
    One single-system gate kind on distinct targets, all rows at once

    Args:
        tab (PauliTableau): updated in place
        kind (GateKind): single-system kind
        targets (Sequence[int]): distinct 0-based positions
        variant (TheoryVariant): theory variant
    """
    targets = np.asarray(targets, dtype=np.intp)
    if targets.size == 0 or len(tab) == 0:
        return tab
    x = tab.x[:, targets]
    z = tab.z[:, targets]
    delta, new_x, new_z = single_rule(kind, variant, x, z)
    tab.sign ^= np.bitwise_xor.reduce(delta, axis=1).astype(np.uint8)
    tab.x[:, targets] = new_x
    tab.z[:, targets] = new_z
    return tab


def apply_cz_fanout(tab, control, partners, cz):
    """
    The run CZ(control, j) for j in partners, applied in sequence, in one pass

    The running z bit of the control contributes the pair count C(w, 2) of the
    partners' x bits, w being their total, so the sequential sign is
        x_c · (z_c·w + Σ x_j z_j + C(w, 2) [+ w for tilde])  mod 2.

    Args:
        tab (PauliTableau): updated in place
        control (int): shared first target
        partners (Sequence[int]): distinct second targets, none equal to control
        cz (CzChoice): standard or tilde CZ
    """
    partners = np.asarray(partners, dtype=np.intp)
    if partners.size == 0 or len(tab) == 0:
        return tab
    xc = tab.x[:, control].astype(np.int64)
    zc = tab.z[:, control].astype(np.int64)
    xj = tab.x[:, partners]
    zj = tab.z[:, partners]
    w = xj.sum(axis=1, dtype=np.int64)
    term = (zc & w) ^ np.bitwise_xor.reduce(xj & zj, axis=1).astype(np.int64) ^ ((w * (w - 1) // 2) & 1)
    if cz is CzChoice.TILDE:
        term ^= w & 1
    tab.sign ^= (xc & term & 1).astype(np.uint8)
    tab.z[:, control] ^= (w & 1).astype(np.uint8)
    tab.z[:, partners] = zj ^ tab.x[:, [control]]
    return tab


def apply_gate_tableau(tab, gate, variant=TheoryVariant.QUANTUM, cz=CzChoice.STANDARD):
    """One gate on every row of a tableau, in place"""
    check_targets(gate, tab.n)
    if gate.kind is GateKind.CZ:
        return apply_cz_fanout(tab, gate.targets[0], gate.targets[1:], cz)
    return apply_single_layer(tab, gate.kind, gate.targets, variant)

