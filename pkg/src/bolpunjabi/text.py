"""Sentence parsing front end: script detection, tokenization, normalization.

Tokenization splits on whitespace, detaches leading/trailing punctuation
codepoints as PUNCT tokens, and classifies all-digit runs as NUMBER.
Normalization expands NUMBER tokens to cardinal words in the target
language so that only speakable WORD and PUNCT tokens remain.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from enum import Enum

from .errors import NormalizationError, ValidationError
from .numwords import english_number_words, punjabi_number_words

# Detached during tokenization; the danda is the Gurmukhi full stop.
PUNCT_CHARS = frozenset('.,?!;:()"\'' + "।")

GURMUKHI_BLOCK = range(0x0A00, 0x0A80)

_GURMUKHI_DIGITS = "੦੧੨੩੪੫੬੭੮੯"


class TokenKind(Enum):
    WORD = "WORD"
    PUNCT = "PUNCT"
    NUMBER = "NUMBER"


class Script(Enum):
    LATIN = "LATIN"
    GURMUKHI = "GURMUKHI"
    NEUTRAL = "NEUTRAL"
    MIXED = "MIXED"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    script: Script
    index: int


def detect_script(text: str) -> Script:
    """Classify text by its letters alone.

    GURMUKHI when every letter is in the Gurmukhi block, LATIN when every
    letter is basic Latin, NEUTRAL when there are no letters, MIXED
    otherwise.  Pure function of the codepoints.
    """
    saw_latin = False
    saw_gurmukhi = False
    saw_other = False
    for ch in text:
        if not unicodedata.category(ch).startswith("L"):
            continue
        cp = ord(ch)
        if cp in GURMUKHI_BLOCK:
            saw_gurmukhi = True
        elif ("a" <= ch <= "z") or ("A" <= ch <= "Z"):
            saw_latin = True
        else:
            saw_other = True
    if saw_other or (saw_latin and saw_gurmukhi):
        return Script.MIXED
    if saw_gurmukhi:
        return Script.GURMUKHI
    if saw_latin:
        return Script.LATIN
    return Script.NEUTRAL


def _is_number_run(surface: str) -> bool:
    return all(c in "0123456789" for c in surface) or all(
        c in _GURMUKHI_DIGITS for c in surface
    )


def _classify(surface: str) -> TokenKind:
    if len(surface) == 1 and surface in PUNCT_CHARS:
        return TokenKind.PUNCT
    if _is_number_run(surface):
        return TokenKind.NUMBER
    return TokenKind.WORD


def _split_field(field: str) -> list[str]:
    """Peel leading and trailing punctuation codepoints off one field."""
    leading: list[str] = []
    trailing: list[str] = []
    start, end = 0, len(field)
    while start < end and field[start] in PUNCT_CHARS:
        leading.append(field[start])
        start += 1
    while end > start and field[end - 1] in PUNCT_CHARS:
        trailing.append(field[end - 1])
        end -= 1
    core = field[start:end]
    return leading + ([core] if core else []) + trailing[::-1]


def tokenize(text: str) -> list[Token]:
    """Split a sentence into WORD / PUNCT / NUMBER tokens."""
    pieces: list[str] = []
    for field in text.split():
        pieces.extend(_split_field(field))
    return [
        Token(surface, _classify(surface), detect_script(surface), i)
        for i, surface in enumerate(pieces)
    ]


def join_tokens(tokens: list[Token]) -> str:
    """Reassemble surfaces: single spaces, none before punctuation."""
    out: list[str] = []
    for token in tokens:
        if out and token.kind is not TokenKind.PUNCT:
            out.append(" ")
        out.append(token.surface)
    return "".join(out)


def normalize(tokens: list[Token], target_script: Script) -> list[Token]:
    """Expand NUMBER tokens to cardinal words of the target language.

    Idempotent; everything but NUMBER passes through.  Raises
    NormalizationError naming the token when a number falls outside the
    supported range.
    """
    if target_script not in (Script.LATIN, Script.GURMUKHI):
        raise ValidationError(f"unsupported normalization target {target_script}")
    to_words = (
        english_number_words
        if target_script is Script.LATIN
        else punjabi_number_words
    )
    out: list[Token] = []
    for token in tokens:
        if token.kind is not TokenKind.NUMBER:
            out.append(replace(token, index=len(out)))
            continue
        try:
            value = int(token.surface)
        except ValueError:
            raise NormalizationError(
                f"cannot read number token {token.surface!r}", token.surface
            ) from None
        for word in to_words(value).split(" "):
            out.append(
                Token(word, TokenKind.WORD, detect_script(word), len(out))
            )
    return out
