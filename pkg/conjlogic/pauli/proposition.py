"""
Signed Pauli-string propositions in packed symplectic form
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from conjlogic.errors import DimensionMismatchError, PropParseError
from conjlogic.utils.gf2 import pack_bits, unpack_bits, get_bit, parity

# letter code x + 2z indexes this table
LETTER_CODES = "IXZY"


class PauliLetter(Enum):
    """Single-system letter as its (x, z) bit pair"""

    I = (0, 0)
    X = (1, 0)
    Z = (0, 1)
    Y = (1, 1)

    @property
    def x(self):
        return self.value[0]

    @property
    def z(self):
        return self.value[1]

    @property
    def is_nontrivial(self):
        return bool(self.x or self.z)

    @classmethod
    def from_bits(cls, x, z):
        return cls((int(x), int(z)))

    def __str__(self):
        return self.name


_LOOKUP = {letter.name: letter for letter in PauliLetter}


@dataclass(frozen=True, eq=False)
class Proposition:
    """
    ⟨±P₁…Pₙ⟩ with the x and z halves packed into 64-bit words

    sign 0 is the plain proposition (outcome 0), sign 1 its negation.
    """

    n: int
    xbits: np.ndarray
    zbits: np.ndarray
    sign: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatchError(f"a proposition needs at least one system, got n={self.n}")
        if self.xbits.shape != self.zbits.shape:
            raise DimensionMismatchError("x and z halves differ in word count")
        self.xbits.setflags(write=False)
        self.zbits.setflags(write=False)
        object.__setattr__(self, 'sign', int(self.sign) & 1)

    # -------- Constructors --------
    @classmethod
    def from_bits(cls, x, z, sign=0):
        """Build from unpacked 0/1 arrays of length n"""
        x = np.asarray(x, dtype=np.uint8)
        z = np.asarray(z, dtype=np.uint8)
        if x.shape != z.shape or x.ndim != 1:
            raise DimensionMismatchError(f"x and z must be equal-length vectors, got {x.shape} and {z.shape}")
        return cls(len(x), pack_bits(x), pack_bits(z), sign)

    @classmethod
    def from_letters(cls, letters, sign=0):
        codes = []
        for position, char in enumerate(letters):
            letter = _LOOKUP.get(char)
            if letter is None:
                raise PropParseError(PropParseError.BAD_LETTER, position, letters)
            codes.append(letter.value)
        if not codes:
            raise PropParseError(PropParseError.EMPTY_STRING, 0, letters)
        bits = np.array(codes, dtype=np.uint8)
        return cls.from_bits(bits[:, 0], bits[:, 1], sign)

    @classmethod
    def identity(cls, n, sign=0):
        """⟨I…I⟩ (tautology) or, with sign 1, ⟨¬I…I⟩ (contradiction)"""
        zeros = np.zeros(n, dtype=np.uint8)
        return cls.from_bits(zeros, zeros, sign)

    @classmethod
    def single(cls, n, index, letter=PauliLetter.X, sign=0):
        """One nontrivial letter at a 0-based index, identities elsewhere"""
        if not 0 <= index < n:
            raise DimensionMismatchError(f"index {index} outside {n} systems")
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        x[index], z[index] = letter.value
        return cls.from_bits(x, z, sign)

    # -------- Accessors --------
    def x_array(self):
        return unpack_bits(self.xbits, self.n)

    def z_array(self):
        return unpack_bits(self.zbits, self.n)

    def letter(self, index):
        return PauliLetter.from_bits(get_bit(self.xbits, index), get_bit(self.zbits, index))

    @property
    def letters(self):
        codes = self.x_array() + 2 * self.z_array()
        return ''.join(LETTER_CODES[c] for c in codes)

    def support(self):
        """0-based positions of the nontrivial letters"""
        return tuple(int(i) for i in np.flatnonzero(self.x_array() | self.z_array()))

    @property
    def is_trivial(self):
        return not (self.xbits.any() or self.zbits.any())

    @property
    def sort_key(self):
        """Lexicographic letter order (I < X < Y < Z), sign 0 before 1"""
        return self.letters, self.sign

    def with_sign(self, sign):
        return Proposition(self.n, self.xbits, self.zbits, sign)

    def same_string(self, other):
        """Equal letter strings, signs ignored"""
        return (
            self.n == other.n
            and np.array_equal(self.xbits, other.xbits)
            and np.array_equal(self.zbits, other.zbits)
        )

    # -------- Serialization --------
    def to_dict(self):
        return {'n': self.n, 'letters': self.letters, 'sign': self.sign}

    @classmethod
    def from_dict(cls, data):
        p = cls.from_letters(data['letters'], data.get('sign', 0))
        if p.n != data.get('n', p.n):
            raise PropParseError(PropParseError.LENGTH_MISMATCH, len(data['letters']), data['letters'])
        return p

    def render(self, negation="-"):
        return f"<{negation if self.sign else ''}{self.letters}>"

    def __eq__(self, other):
        if not isinstance(other, Proposition):
            return NotImplemented
        return self.sign == other.sign and self.same_string(other)

    def __hash__(self):
        return hash((self.n, self.sign, self.xbits.tobytes(), self.zbits.tobytes()))

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Proposition({self.render()!r})"


def _check_dims(p, q):
    if p.n != q.n:
        raise DimensionMismatchError(f"{p} has {p.n} systems, {q} has {q.n}")


def compatible(p, q):
    """
    Whether p and q can hold truth values simultaneously

    The letters differ (both nontrivial) at an even number of positions, i.e. the
    symplectic product x_p·z_q + z_p·x_q vanishes mod 2. Signs are ignored.

    Args:
        p (Proposition): first proposition
        q (Proposition): second proposition, same system count

    Returns:
        bool: True when compatible
    """
    _check_dims(p, q)
    return parity((p.xbits & q.zbits) ^ (p.zbits & q.xbits)) == 0


def negate_prop(p):
    return p.with_sign(p.sign ^ 1)


def weight(p):
    return int(np.bitwise_count(p.xbits | p.zbits).sum())
