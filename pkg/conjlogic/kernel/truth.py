"""
Three-valued truth values and the conjugate logic connectives
"""
from enum import Enum
from functools import reduce


class TruthValue(Enum):
    """False, indeterminate and true, written 0, ? and 1"""

    FALSE = "0"
    INDETERMINATE = "?"
    TRUE = "1"

    @property
    def symbol(self):
        return self.value

    @property
    def is_determinate(self):
        return self is not TruthValue.INDETERMINATE

    @property
    def order(self):
        """Display position in 0 < ? < 1 (no arithmetic meaning)"""
        return DISPLAY_ORDER.index(self)

    @classmethod
    def from_symbol(cls, symbol):
        for value in cls:
            if value.value == symbol:
                return value
        raise ValueError(f"not a truth value: {symbol!r}")

    @classmethod
    def from_bool(cls, flag):
        return cls.TRUE if flag else cls.FALSE

    def __str__(self):
        return self.value


F, U, T = TruthValue.FALSE, TruthValue.INDETERMINATE, TruthValue.TRUE

DISPLAY_ORDER = (F, U, T)


def negate(v):
    if v is U:
        return U
    return F if v is T else T


def conj(a, b):
    if a is F or b is F:
        return F
    if a is T and b is T:
        return T
    return U


def disj(a, b):
    if a is T or b is T:
        return T
    if a is F and b is F:
        return F
    return U


def xor3(a, b):
    if a is U or b is U:
        return U
    return TruthValue.from_bool(a is not b)


def material_implies(a, b):
    # (?, ?) counts as 1: an indeterminate antecedent licenses an indeterminate consequent
    return TruthValue.from_bool(a is F or b is T or a is b)


def material_iff(a, b):
    return TruthValue.from_bool(a is b)


def conj_all(values):
    """Left fold of conj; the empty conjunction is true"""
    return reduce(conj, values, T)


def disj_all(values):
    """Left fold of disj; the empty disjunction is false"""
    return reduce(disj, values, F)
