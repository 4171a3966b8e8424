"""
Unpacked batch form of many propositions over the same systems
"""
from dataclasses import dataclass

import numpy as np

from conjlogic.errors import DimensionMismatchError
from conjlogic.pauli.proposition import Proposition
from conjlogic.utils.gf2 import pack_bits


@dataclass
class PauliTableau:
    """
    rows x n uint8 bit matrices plus one sign bit per row

    Gate layers update x, z and sign in place; slices along the row axis are
    views, so tail(k) shares memory with the full tableau.
    """

    x: np.ndarray
    z: np.ndarray
    sign: np.ndarray

    @property
    def n(self):
        return self.x.shape[1]

    def __len__(self):
        return self.x.shape[0]

    @classmethod
    def empty(cls, rows, n):
        return cls(
            np.zeros((rows, n), dtype=np.uint8),
            np.zeros((rows, n), dtype=np.uint8),
            np.zeros(rows, dtype=np.uint8),
        )

    @classmethod
    def from_props(cls, props, n=None):
        props = list(props)
        if n is None:
            if not props:
                raise DimensionMismatchError("system count needed for an empty tableau")
            n = props[0].n
        tab = cls.empty(len(props), n)
        for row, p in enumerate(props):
            if p.n != n:
                raise DimensionMismatchError(f"{p} has {p.n} systems, expected {n}")
            tab.x[row] = p.x_array()
            tab.z[row] = p.z_array()
            tab.sign[row] = p.sign
        return tab

    def to_props(self):
        if len(self) == 0:
            return []
        xw = pack_bits(self.x)
        zw = pack_bits(self.z)
        return [Proposition(self.n, xw[r].copy(), zw[r].copy(), int(self.sign[r])) for r in range(len(self))]

    def row(self, index):
        return Proposition.from_bits(self.x[index], self.z[index], int(self.sign[index]))

    def tail(self, start):
        return PauliTableau(self.x[start:], self.z[start:], self.sign[start:])

    def copy(self):
        return PauliTableau(self.x.copy(), self.z.copy(), self.sign.copy())
