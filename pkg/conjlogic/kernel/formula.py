"""
Formula AST over atoms and the six connectives, plus a small text parser
"""
import re
from dataclasses import dataclass

from conjlogic.errors import FormulaParseError, MissingAtomError
from conjlogic.kernel.truth import (
    TruthValue,
    negate,
    conj,
    disj,
    xor3,
    material_implies,
    material_iff,
)

ATOM_NAMES = "pqrstuvw"


def atom_name(atom_id):
    if atom_id < len(ATOM_NAMES):
        return ATOM_NAMES[atom_id]
    return f"a{atom_id}"


class Formula:
    """Base class of all formula nodes"""

    def atoms(self):
        return frozenset()

    def evaluate(self, assignment):
        raise NotImplementedError

    def render(self, names=None):
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Atom(Formula):
    id: int

    def atoms(self):
        return frozenset({self.id})

    def evaluate(self, assignment):
        try:
            return assignment[self.id]
        except KeyError:
            raise MissingAtomError(self.id) from None

    def render(self, names=None):
        if names is not None:
            return names[self.id]
        return atom_name(self.id)


@dataclass(frozen=True)
class Tautology(Formula):
    def evaluate(self, assignment):
        return TruthValue.TRUE

    def render(self, names=None):
        return "<I>"


@dataclass(frozen=True)
class Contradiction(Formula):
    def evaluate(self, assignment):
        return TruthValue.FALSE

    def render(self, names=None):
        return "<-I>"


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    def atoms(self):
        return self.operand.atoms()

    def evaluate(self, assignment):
        return negate(self.operand.evaluate(assignment))

    def render(self, names=None):
        inner = self.operand.render(names)
        if isinstance(self.operand, _Binary):
            inner = f"({inner})"
        return f"¬{inner}"


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    # set by subclasses
    symbol = "?"
    connective = None

    def atoms(self):
        return self.left.atoms() | self.right.atoms()

    def evaluate(self, assignment):
        return type(self).connective(self.left.evaluate(assignment), self.right.evaluate(assignment))

    def render(self, names=None):
        return f"{_wrap(self.left, names)} {self.symbol} {_wrap(self.right, names)}"


def _wrap(f, names):
    text = f.render(names)
    return f"({text})" if isinstance(f, _Binary) else text


@dataclass(frozen=True)
class And(_Binary):
    symbol = "∧"
    connective = staticmethod(conj)


@dataclass(frozen=True)
class Or(_Binary):
    symbol = "∨"
    connective = staticmethod(disj)


@dataclass(frozen=True)
class Xor(_Binary):
    symbol = "⊻"
    connective = staticmethod(xor3)


@dataclass(frozen=True)
class Implies(_Binary):
    symbol = "→"
    connective = staticmethod(material_implies)


@dataclass(frozen=True)
class Iff(_Binary):
    symbol = "↔"
    connective = staticmethod(material_iff)


def evaluate(f, assignment):
    """
    Evaluate a formula bottom-up

    Args:
        f (Formula): formula to evaluate
        assignment (Mapping[int, TruthValue]): value of every atom id in f

    Returns:
        TruthValue: the formula's value
    """
    return f.evaluate(assignment)


def atom_count(*formulas):
    """Size of the shared atom id space (highest id + 1)"""
    ids = frozenset().union(*(f.atoms() for f in formulas))
    return max(ids) + 1 if ids else 0


# =============================================================================
# TEXT PARSER
# =============================================================================

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<const><¬I>|<-I>|<I>|⊤|⊥|\bT\b|\bF\b)"
    r"|(?P<op><->|->|↔|→|[¬~!∧&∨|⊻^()])"
    r"|(?P<atom>[a-z][a-z0-9_]*))"
)

_OPERATOR_ALIASES = {
    "~": "¬", "!": "¬",
    "&": "∧",
    "|": "∨",
    "^": "⊻",
    "->": "→",
    "<->": "↔",
}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise FormulaParseError(f"unexpected character {text[pos]!r}", pos)
        start = match.start(match.lastgroup)
        value = match.group(match.lastgroup)
        if match.lastgroup == "op":
            value = _OPERATOR_ALIASES.get(value, value)
        tokens.append((match.lastgroup, value, start))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent, precedence low to high: ↔, →, ∨, ⊻, ∧, ¬"""

    def __init__(self, tokens, ids, length):
        self.tokens = tokens
        self.ids = ids
        self.index = 0
        self.length = length

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def position(self):
        token = self.peek()
        return token[2] if token else self.length

    def accept(self, op):
        token = self.peek()
        if token and token[0] == "op" and token[1] == op:
            self.index += 1
            return True
        return False

    def parse(self):
        if not self.tokens:
            raise FormulaParseError("empty formula", 0)
        node = self.iff()
        if self.peek() is not None:
            raise FormulaParseError(f"unexpected {self.peek()[1]!r}", self.position())
        return node

    def iff(self):
        node = self.implies()
        while self.accept("↔"):
            node = Iff(node, self.implies())
        return node

    def implies(self):
        node = self.disjunction()
        if self.accept("→"):
            return Implies(node, self.implies())
        return node

    def disjunction(self):
        node = self.exclusive()
        while self.accept("∨"):
            node = Or(node, self.exclusive())
        return node

    def exclusive(self):
        node = self.conjunction()
        while self.accept("⊻"):
            node = Xor(node, self.conjunction())
        return node

    def conjunction(self):
        node = self.unary()
        while self.accept("∧"):
            node = And(node, self.unary())
        return node

    def unary(self):
        if self.accept("¬"):
            return Not(self.unary())
        return self.primary()

    def primary(self):
        token = self.peek()
        if token is None:
            raise FormulaParseError("unexpected end of formula", self.length)
        kind, value, _ = token
        if kind == "atom":
            self.index += 1
            return Atom(self.ids[value])
        if kind == "const":
            self.index += 1
            if value in ("<I>", "⊤", "T"):
                return Tautology()
            return Contradiction()
        if self.accept("("):
            node = self.iff()
            if not self.accept(")"):
                raise FormulaParseError("expected ')'", self.position())
            return node
        raise FormulaParseError(f"unexpected {value!r}", token[2])


def parse_formula(*texts):
    """
    Parse one or more formulas over a shared atom id space

    Atom names are numbered in sorted order across all texts, so "p", "q", "r"
    become ids 0, 1, 2.

    Args:
        *texts (str): formula texts

    Returns:
        tuple: (formulas, names) with one Formula per text and the atom names by id
    """
    tokenized = [_tokenize(text) for text in texts]
    names = sorted({value for tokens in tokenized for kind, value, _ in tokens if kind == "atom"})
    ids = {name: index for index, name in enumerate(names)}
    formulas = tuple(_Parser(tokens, ids, len(text)).parse() for tokens, text in zip(tokenized, texts))
    return formulas, tuple(names)
