"""English-to-Punjabi translation with a built-in formant TTS engine."""

from .engine import Engine, EngineConfig, default_config, load_config, speak
from .errors import (
    EngineError,
    G2PError,
    LanguageMismatchError,
    LexiconFormatError,
    NormalizationError,
    RuleFormatError,
    UnsupportedDirectionError,
    UnsupportedInputError,
    ValidationError,
    VoiceFormatError,
)
from .g2p import (
    Phoneme,
    PhonemeKind,
    VoiceInventory,
    default_inventory,
    grapheme_to_phoneme,
    load_voice,
)
from .lexicon import (
    Candidate,
    Lexicon,
    LexiconEntry,
    add_entry,
    load_lexicon,
    lookup,
    serialize_lexicon,
)
from .prosody import PhonemeEvent, assign_prosody
from .synth import SAMPLE_RATE, AudioBuffer, synthesize
from .text import Script, Token, TokenKind, detect_script, join_tokens, normalize, tokenize
from .translate import (
    Chunk,
    ReorderRule,
    TranslationResult,
    assemble,
    load_rules,
    reorder,
    select_candidate,
    substitute,
    translate_sentence,
)
from .wav import decode_wav, encode_wav

__version__ = "0.1.0"

__all__ = [
    "AudioBuffer",
    "Candidate",
    "Chunk",
    "Engine",
    "EngineConfig",
    "EngineError",
    "G2PError",
    "LanguageMismatchError",
    "Lexicon",
    "LexiconEntry",
    "LexiconFormatError",
    "NormalizationError",
    "Phoneme",
    "PhonemeEvent",
    "PhonemeKind",
    "ReorderRule",
    "RuleFormatError",
    "SAMPLE_RATE",
    "Script",
    "Token",
    "TokenKind",
    "TranslationResult",
    "UnsupportedDirectionError",
    "UnsupportedInputError",
    "ValidationError",
    "VoiceFormatError",
    "VoiceInventory",
    "add_entry",
    "assemble",
    "assign_prosody",
    "decode_wav",
    "default_config",
    "default_inventory",
    "detect_script",
    "encode_wav",
    "grapheme_to_phoneme",
    "join_tokens",
    "load_config",
    "load_lexicon",
    "load_rules",
    "load_voice",
    "lookup",
    "normalize",
    "reorder",
    "select_candidate",
    "serialize_lexicon",
    "speak",
    "substitute",
    "synthesize",
    "tokenize",
    "translate_sentence",
]
