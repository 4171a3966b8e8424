"""
Exception hierarchy for conjlogic.

Every error carries the process exit code the command line reports for it.
"""


class ConjLogicError(ValueError):
    """Base class for all conjlogic errors"""

    exit_code = 1


class UsageError(ConjLogicError):
    """Bad command line: unknown subcommand, conflicting flags, bad values"""


class MissingSeedError(UsageError):
    """A measurement needed randomness but no seed was supplied"""


class MissingAtomError(ConjLogicError):
    """An atom of the formula has no value in the assignment"""

    def __init__(self, atom_id):
        super().__init__(f"atom {atom_id} is not assigned")
        self.atom_id = atom_id


class AtomLimitError(ConjLogicError):
    """Exhaustive checking requested over too many atoms"""


class FormulaParseError(ConjLogicError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PropParseError(ConjLogicError):
    """Malformed proposition text"""

    BAD_LETTER = "bad letter"
    EMPTY_STRING = "empty string"
    MALFORMED_SIGN = "malformed sign"
    LENGTH_MISMATCH = "length mismatch"
    MISSING_BRACKET = "missing bracket"

    def __init__(self, kind, position, text=""):
        super().__init__(f"{kind} at {position} in {text!r}")
        self.kind = kind
        self.position = position
        self.text = text


class DimensionMismatchError(ConjLogicError):
    """Two propositions (or a proposition and a state) differ in system count"""


class GateError(ConjLogicError):
    """Gate target out of range, or CZ on a single system"""


class TranscriptParseError(ConjLogicError):
    def __init__(self, message, step=""):
        super().__init__(f"{message}: {step!r}" if step else message)
        self.step = step


class TrivialPropositionError(ConjLogicError):
    """The all-identity string carries no information about any system"""


class IncompatiblePairError(ConjLogicError):
    """Two propositions of a set cannot hold truth values simultaneously

    Indices are stored 0-based and reported 1-based.
    """

    def __init__(self, first, second):
        super().__init__(f"propositions {first + 1} and {second + 1} are incompatible")
        self.first = first
        self.second = second


class DependentSetError(ConjLogicError):
    """A proposition lies in the span of the ones before it"""

    def __init__(self, index, detail=""):
        message = f"proposition {index + 1} depends on the preceding ones"
        super().__init__(f"{message} ({detail})" if detail else message)
        self.index = index


class IncompatibleAssertionError(ConjLogicError):
    """Asserting would need a measurement: the proposition clashes with a generator"""


class ClosureLimitError(ConjLogicError):
    """Closure enumeration would exceed the configured generator cap"""


class ContradictionError(ConjLogicError):
    """The state predicts the negation of what was asserted, or is poisoned"""

    exit_code = 2
