"""
Dense-matrix references for the quantum variant (small n only)
"""
import itertools
from functools import reduce

import numpy as np

from conjlogic.clifford.gates import GateKind
from conjlogic.pauli.proposition import Proposition

I2 = np.eye(2, dtype=complex)
PAULI = {
    "I": I2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
S = np.diag([1, 1j])
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

SINGLE_UNITARIES = {
    GateKind.FLIP_X: PAULI["X"],
    GateKind.FLIP_Y: PAULI["Y"],
    GateKind.FLIP_Z: PAULI["Z"],
    GateKind.S: S,
    GateKind.SINV: S.conj().T,
    GateKind.H: H,
}


def kron_all(mats):
    return reduce(np.kron, mats)


def pauli_matrix(p):
    """(-1)^sign times the tensor product of the letters, system 1 leftmost"""
    return (-1) ** p.sign * kron_all([PAULI[c] for c in p.letters])


def gate_unitary(gate, n):
    if gate.kind is GateKind.CZ:
        i, j = gate.targets
        diag = np.ones(2 ** n, dtype=complex)
        for index in range(2 ** n):
            if (index >> (n - 1 - i)) & 1 and (index >> (n - 1 - j)) & 1:
                diag[index] = -1
        return np.diag(diag)
    mats = [I2] * n
    mats[gate.targets[0]] = SINGLE_UNITARIES[gate.kind]
    return kron_all(mats)


def conjugate(gate, p):
    """U P U† as a dense matrix"""
    u = gate_unitary(gate, p.n)
    return u @ pauli_matrix(p) @ u.conj().T


def identify(matrix, x, z):
    """Sign of matrix = ±P(x, z); AssertionError when it is neither"""
    candidate = Proposition.from_bits(x, z, 0)
    reference = pauli_matrix(candidate)
    if np.allclose(matrix, reference):
        return candidate
    if np.allclose(matrix, -reference):
        return candidate.with_sign(1)
    raise AssertionError(f"matrix is not ±{candidate.letters}")


def group_closure(generators, n):
    """Every signed product of a subset of commuting generators"""
    members = set()
    for chosen in itertools.product((0, 1), repeat=len(generators)):
        matrix = np.eye(2 ** n, dtype=complex)
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        for flag, g in zip(chosen, generators):
            if flag:
                matrix = matrix @ pauli_matrix(g)
                x ^= g.x_array()
                z ^= g.z_array()
        members.add(identify(matrix, x, z))
    return members


def all_props(n):
    """Every signed Pauli string on n systems"""
    for letters in itertools.product("IXYZ", repeat=n):
        for sign in (0, 1):
            yield Proposition.from_letters("".join(letters), sign)
