"""Grapheme-to-phoneme conversion for Gurmukhi and Latin text.

Gurmukhi handling follows the script's phonology: consonants carry the
inherent vowel unless a dependent vowel sign or halant follows, the
word-final inherent vowel is elided, and tippi/bindi nasalize the
preceding vowel.  The Latin path is a small ordered letter-to-sound rule
table (deliberately rough; English spelling deserves no better here).

The phoneme inventory itself is data, loaded from ``voice.tsv`` and
closed after load: symbol, kind, three formant targets, base duration.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from .errors import G2PError, ValidationError, VoiceFormatError
from .text import Script, Token, TokenKind

SILENCE_SYMBOL = "sil"


class PhonemeKind(Enum):
    VOWEL = "VOWEL"
    CONSONANT = "CONSONANT"
    SILENCE = "SILENCE"


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    kind: PhonemeKind


@dataclass(frozen=True)
class InventoryItem:
    phoneme: Phoneme
    formants: tuple[float, float, float] | None
    duration_ms: float


class VoiceInventory:
    """Closed phoneme inventory with per-symbol synthesis targets."""

    def __init__(self, items: dict[str, InventoryItem]):
        if SILENCE_SYMBOL not in items:
            raise VoiceFormatError(f"inventory lacks {SILENCE_SYMBOL!r}")
        self._items = dict(items)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._items

    def __len__(self) -> int:
        return len(self._items)

    def symbols(self) -> list[str]:
        return list(self._items)

    def item(self, symbol: str) -> InventoryItem:
        try:
            return self._items[symbol]
        except KeyError:
            raise ValidationError(f"unknown phoneme symbol {symbol!r}") from None

    def phoneme(self, symbol: str) -> Phoneme:
        return self.item(symbol).phoneme

    def silence(self) -> Phoneme:
        return self.phoneme(SILENCE_SYMBOL)


def load_voice(source: io.IOBase | io.TextIOBase | str) -> VoiceInventory:
    """Parse a voice.tsv stream: symbol, kind, F1, F2, F3, duration."""
    if isinstance(source, str):
        text = source
    elif isinstance(source, (io.RawIOBase, io.BufferedIOBase)):
        text = source.read().decode("utf-8")
    else:
        text = source.read()
    items: dict[str, InventoryItem] = {}
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise VoiceFormatError(
                f"expected 6 tab-separated fields, got {len(fields)}", line_no
            )
        symbol, raw_kind, *raw_numbers = (f.strip() for f in fields)
        if symbol in items:
            raise VoiceFormatError(f"duplicate symbol {symbol!r}", line_no)
        try:
            kind = PhonemeKind(raw_kind)
        except ValueError:
            raise VoiceFormatError(f"unknown kind {raw_kind!r}", line_no) from None
        try:
            f1, f2, f3, duration = (float(x) for x in raw_numbers)
        except ValueError:
            raise VoiceFormatError(f"non-numeric field in {line!r}", line_no) from None
        if not 20.0 <= duration <= 600.0:
            raise VoiceFormatError(
                f"duration {duration} outside [20, 600] ms", line_no
            )
        if kind is PhonemeKind.SILENCE:
            formants = None
        else:
            if not 0.0 < f1 < f2 < f3:
                raise VoiceFormatError(
                    f"formants must satisfy 0 < F1 < F2 < F3, got {f1}/{f2}/{f3}",
                    line_no,
                )
            formants = (f1, f2, f3)
        items[symbol] = InventoryItem(Phoneme(symbol, kind), formants, duration)
    return VoiceInventory(items)


@lru_cache(maxsize=1)
def default_inventory() -> VoiceInventory:
    data = resources.files(__package__).joinpath("data/voice.tsv").read_text("utf-8")
    return load_voice(data)


# --- Gurmukhi letter tables (codepoints spelled out; several letters have
# --- both precomposed and base+nukta encodings in the wild).

_G_INDEPENDENT_VOWELS = {
    "ਅ": "a",    # ਅ
    "ਆ": "aa",   # ਆ
    "ਇ": "i",    # ਇ
    "ਈ": "ii",   # ਈ
    "ਉ": "u",    # ਉ
    "ਊ": "uu",   # ਊ
    "ਏ": "e",    # ਏ
    "ਐ": "ai",   # ਐ
    "ਓ": "o",    # ਓ
    "ਔ": "au",   # ਔ
    "ੲ": "i",    # ੲ iri (bare bearer)
    "ੳ": "u",    # ੳ ura (bare bearer)
}

_G_VOWEL_SIGNS = {
    "ਾ": "aa",
    "ਿ": "i",
    "ੀ": "ii",
    "ੁ": "u",
    "ੂ": "uu",
    "ੇ": "e",
    "ੈ": "ai",
    "ੋ": "o",
    "ੌ": "au",
}

_G_CONSONANTS = {
    "ਕ": "k", "ਖ": "kh", "ਗ": "g", "ਘ": "gh",
    "ਙ": "ng", "ਚ": "ch", "ਛ": "chh", "ਜ": "j",
    "ਝ": "jh", "ਞ": "ny", "ਟ": "tt", "ਠ": "tth",
    "ਡ": "dd", "ਢ": "ddh", "ਣ": "nn", "ਤ": "t",
    "ਥ": "th", "ਦ": "d", "ਧ": "dh", "ਨ": "n",
    "ਪ": "p", "ਫ": "ph", "ਬ": "b", "ਭ": "bh",
    "ਮ": "m", "ਯ": "y", "ਰ": "r", "ਲ": "l",
    "ਲ਼": "ll", "ਵ": "v", "ਸ਼": "sh", "ਸ": "s",
    "ਹ": "h",
    "ਖ਼": "kh",  # ਖ਼
    "ਗ਼": "g",   # ਗ਼
    "ਜ਼": "z",   # ਜ਼
    "ੜ": "rr",  # ੜ
    "ਫ਼": "f",   # ਫ਼
}

_HALANT = "੍"
_NUKTA = "਼"
_TIPPI = "ੰ"
_BINDI = "ਂ"
_ADDAK = "ੱ"

# base + nukta sequences folded to their single-codepoint letters (NFC
# keeps these decomposed, so text arrives in either encoding)
_NUKTA_FOLDS = {
    "ਖ਼": "ਖ਼",
    "ਗ਼": "ਗ਼",
    "ਜ਼": "ਜ਼",
    "ਡ਼": "ੜ",
    "ਫ਼": "ਫ਼",
    "ਲ਼": "ਲ਼",
    "ਸ਼": "ਸ਼",
}

_NASAL_VARIANT = {
    "a": "an", "aa": "aan", "i": "in", "ii": "iin", "u": "un",
    "uu": "uun", "e": "en", "ai": "ain", "o": "on", "au": "aun",
}

SUPPORTED_GURMUKHI = frozenset(
    set(_G_INDEPENDENT_VOWELS)
    | set(_G_VOWEL_SIGNS)
    | set(_G_CONSONANTS)
    | {_HALANT, _NUKTA, _TIPPI, _BINDI, _ADDAK}
)

SUPPORTED_LATIN = frozenset(
    "abcdefghijklmnopqrstuvwxyz" + "ABCDEFGHIJKLMNOPQRSTUVWXYZ" + "'"
)

# Longest-match-first letter-to-sound rules for English.
_LATIN_DIGRAPHS = {
    "th": ["th"], "sh": ["sh"], "ch": ["ch"], "ph": ["f"], "wh": ["v"],
    "ck": ["k"], "qu": ["k", "v"], "ng": ["ng"], "ee": ["ii"],
    "oo": ["uu"], "ea": ["ii"], "ai": ["e"], "ay": ["e"], "ou": ["au"],
}

_LATIN_SINGLE = {
    "a": ["a"], "b": ["b"], "c": ["k"], "d": ["d"], "e": ["e"],
    "f": ["f"], "g": ["g"], "h": ["h"], "i": ["i"], "j": ["j"],
    "k": ["k"], "l": ["l"], "m": ["m"], "n": ["n"], "o": ["o"],
    "p": ["p"], "q": ["k"], "r": ["r"], "s": ["s"], "t": ["t"],
    "u": ["u"], "v": ["v"], "w": ["v"], "x": ["k", "s"], "y": ["y"],
    "z": ["z"],
}


def _fold_nukta(word: str) -> str:
    for seq, composed in _NUKTA_FOLDS.items():
        if seq[0] in word:
            word = word.replace(seq, composed)
    return word


def _gurmukhi_word(word: str) -> list[str]:
    """Transcribe one Gurmukhi word to phoneme symbols."""
    word = _fold_nukta(word)
    phones: list[str] = []
    pending = False  # consonant awaiting its inherent vowel
    for ch in word:
        if ch in _G_CONSONANTS:
            if pending:
                phones.append("a")
            phones.append(_G_CONSONANTS[ch])
            pending = True
        elif ch in _G_VOWEL_SIGNS:
            phones.append(_G_VOWEL_SIGNS[ch])
            pending = False
        elif ch in _G_INDEPENDENT_VOWELS:
            if pending:
                phones.append("a")
                pending = False
            phones.append(_G_INDEPENDENT_VOWELS[ch])
        elif ch == _HALANT:
            pending = False  # inherent vowel suppressed: consonant cluster
        elif ch in (_TIPPI, _BINDI):
            if pending:
                phones.append("an")
                pending = False
            elif phones and phones[-1] in _NASAL_VARIANT:
                phones[-1] = _NASAL_VARIANT[phones[-1]]
        elif ch == _ADDAK:
            pass  # gemination ignored in v1
        elif ch == _NUKTA:
            pass  # nukta on a letter without a dedicated phoneme
        else:
            raise G2PError(ch, word)
    # word-final inherent vowel is elided
    return phones


def _latin_word(word: str) -> list[str]:
    for ch in word:
        if ch not in SUPPORTED_LATIN:
            raise G2PError(ch, word)
    phones: list[str] = []
    text = word.lower()
    i = 0
    while i < len(text):
        pair = text[i:i + 2]
        if pair in _LATIN_DIGRAPHS:
            phones.extend(_LATIN_DIGRAPHS[pair])
            i += 2
            continue
        ch = text[i]
        if ch in _LATIN_SINGLE:
            phones.extend(_LATIN_SINGLE[ch])
        elif ch == "'":
            pass  # contraction apostrophe is silent
        else:
            raise G2PError(word[i], word)
        i += 1
    return phones


def grapheme_to_phoneme(
    tokens: list[Token],
    script: Script,
    inventory: VoiceInventory | None = None,
) -> list[Phoneme]:
    """Map tokens to phonemes; SILENCE at word boundaries and punctuation.

    Total over the supported codepoint sets; anything else raises a
    G2PError naming the codepoint.  NUMBER tokens must have been expanded
    by normalize() beforehand.
    """
    if script not in (Script.LATIN, Script.GURMUKHI):
        raise ValidationError(f"unsupported script for g2p: {script}")
    inv = inventory or default_inventory()
    to_symbols = _gurmukhi_word if script is Script.GURMUKHI else _latin_word
    phones: list[Phoneme] = []
    prev_word = False
    for token in tokens:
        if token.kind is TokenKind.PUNCT:
            phones.append(inv.silence())
            prev_word = False
            continue
        if token.kind is TokenKind.NUMBER:
            raise G2PError(token.surface[0], token.surface)
        if prev_word:
            phones.append(inv.silence())
        phones.extend(inv.phoneme(s) for s in to_symbols(token.surface))
        prev_word = True
    return phones
