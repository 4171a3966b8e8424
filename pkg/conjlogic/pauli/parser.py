"""
Text grammar for propositions and conjunctions

    prop        := '<' sign? letter+ '>'
    conjunction := '<' (sign? letter+ (',' sign? letter+)*)? '>'
    sign        := '-' | '¬'
    letter      := I | X | Y | Z

The angle brackets may also be written ⟨ ⟩.
"""
from conjlogic.errors import PropParseError
from conjlogic.pauli.proposition import Proposition

OPEN_BRACKETS = "<⟨"
CLOSE_BRACKETS = ">⟩"
SIGN_MARKERS = "-¬"
LETTERS = "IXYZ"


def _strip_brackets(text):
    """Return (body, offset of body in text)"""
    start = len(text) - len(text.lstrip())
    end = len(text.rstrip())
    if start == end:
        raise PropParseError(PropParseError.EMPTY_STRING, 0, text)
    if text[start] not in OPEN_BRACKETS:
        raise PropParseError(PropParseError.MISSING_BRACKET, start, text)
    if end - start < 2 or text[end - 1] not in CLOSE_BRACKETS:
        raise PropParseError(PropParseError.MISSING_BRACKET, end - 1, text)
    return text[start + 1:end - 1], start + 1


def _parse_body(body, offset, text, expected_n):
    sign = 0
    index = 0
    if body[:1] and body[:1] in SIGN_MARKERS:
        sign = 1
        index = 1
    letters = body[index:]
    if not letters:
        raise PropParseError(PropParseError.EMPTY_STRING, offset + index, text)
    for position, char in enumerate(letters, start=offset + index):
        if char in SIGN_MARKERS:
            raise PropParseError(PropParseError.MALFORMED_SIGN, position, text)
        if char not in LETTERS:
            raise PropParseError(PropParseError.BAD_LETTER, position, text)
    if expected_n is not None and len(letters) != expected_n:
        raise PropParseError(PropParseError.LENGTH_MISMATCH, offset + len(body), text)
    return Proposition.from_letters(letters, sign)


def parse_prop(text, expected_n=None):
    """
    Parse one proposition such as "<ZX>" or "<-YYI>"

    Args:
        text (str): proposition text
        expected_n (int): required system count, or None for any

    Returns:
        Proposition: the parsed proposition

    Raises:
        PropParseError: with the character offset and the kind of defect
    """
    body, offset = _strip_brackets(text)
    if not body:
        raise PropParseError(PropParseError.EMPTY_STRING, offset, text)
    return _parse_body(body, offset, text, expected_n)


def parse_conjunction(text, expected_n=None, allow_empty=False):
    """
    Parse "<ZI,IX>" into its conjuncts; every conjunct carries its own sign

    All conjuncts must have the same length (expected_n when given).
    "<>" is the empty conjunction and is accepted only with allow_empty.
    """
    body, offset = _strip_brackets(text)
    if not body.strip():
        if allow_empty:
            return []
        raise PropParseError(PropParseError.EMPTY_STRING, offset, text)

    props = []
    position = offset
    for chunk in body.split(","):
        lead = len(chunk) - len(chunk.lstrip())
        item = chunk.strip()
        if not item:
            raise PropParseError(PropParseError.EMPTY_STRING, position + lead, text)
        prop = _parse_body(item, position + lead, text, expected_n)
        if expected_n is None:
            expected_n = prop.n
        props.append(prop)
        position += len(chunk) + 1
    return props


def format_prop(p, negation="-"):
    """Canonical text; pass negation="¬" for the display form"""
    return p.render(negation)


def format_conjunction(props, negation="-"):
    inner = ",".join(f"{negation if p.sign else ''}{p.letters}" for p in props)
    return f"<{inner}>"
