"""Engine assembly: configuration, data loading, translate and speak.

An Engine bundles the loaded lexicon, reorder rules, and voice inventory.
All three are immutable after load, so one Engine may serve concurrent
requests without coordination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import (
    ConfigError,
    LanguageMismatchError,
    UnsupportedInputError,
    ValidationError,
)
from .g2p import VoiceInventory, default_inventory, grapheme_to_phoneme, load_voice
from .lexicon import Lexicon, load_lexicon
from .prosody import assign_prosody
from .synth import synthesize
from .text import Script, TokenKind, detect_script, normalize, tokenize
from .translate import ReorderRule, TranslationResult, load_rules, translate_sentence
from .wav import encode_wav

LANGUAGES = ("en", "pa", "auto")
DEFAULT_LISTEN = "127.0.0.1:8483"
CONFIG_ENV_VAR = "PB_CONFIG"


def _data_path(name: str) -> Path:
    return Path(str(resources.files(__package__).joinpath("data", name)))


@dataclass(frozen=True)
class EngineConfig:
    lexicon_path: Path
    rules_path: Path
    voice_path: Path
    listen_address: str = DEFAULT_LISTEN
    web_root: Path | None = None

    def host_port(self) -> tuple[str, int]:
        host, _, port = self.listen_address.rpartition(":")
        if not host or not port.isdigit() or not 0 < int(port) < 65536:
            raise ConfigError(f"bad listen address {self.listen_address!r}")
        return host, int(port)

    def validate(self) -> None:
        for path in (self.lexicon_path, self.rules_path, self.voice_path):
            if not Path(path).is_file():
                raise ConfigError(f"missing data file: {path}")
        self.host_port()


def default_config() -> EngineConfig:
    return EngineConfig(
        lexicon_path=_data_path("lexicon.tsv"),
        rules_path=_data_path("rules.tsv"),
        voice_path=_data_path("voice.tsv"),
    )


def load_config(path: str | Path) -> EngineConfig:
    """Read a JSON config file; absent keys fall back to packaged data."""
    try:
        raw = json.loads(Path(path).read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must hold a JSON object")
    base = default_config()
    config = EngineConfig(
        lexicon_path=Path(raw.get("lexicon_path", base.lexicon_path)),
        rules_path=Path(raw.get("rules_path", base.rules_path)),
        voice_path=Path(raw.get("voice_path", base.voice_path)),
        listen_address=raw.get("listen_address", base.listen_address),
        web_root=Path(raw["web_root"]) if raw.get("web_root") else None,
    )
    config.validate()
    return config


class Engine:
    """Loaded translation + speech engine; immutable and thread-safe."""

    def __init__(
        self,
        lexicon: Lexicon,
        rules: list[ReorderRule],
        inventory: VoiceInventory,
    ):
        self.lexicon = lexicon
        self.rules = list(rules)
        self.inventory = inventory

    @classmethod
    def from_config(cls, config: EngineConfig) -> "Engine":
        config.validate()
        with open(config.lexicon_path, "rb") as fh:
            lexicon = load_lexicon(fh)
        rules = load_rules(Path(config.rules_path).read_text("utf-8"))
        inventory = load_voice(Path(config.voice_path).read_text("utf-8"))
        return cls(lexicon, rules, inventory)

    @classmethod
    def default(cls) -> "Engine":
        return cls.from_config(default_config())

    def translate(self, text: str) -> TranslationResult:
        return translate_sentence(text, self.lexicon, self.rules)

    def speak(self, text: str, language: str = "auto") -> bytes:
        """Render text to WAV bytes in the requested (or detected) language."""
        if language not in LANGUAGES:
            raise ValidationError(f"unknown language {language!r}")
        script = detect_script(text)
        if language == "auto":
            if script is Script.MIXED:
                raise UnsupportedInputError("mixed-script text cannot be spoken")
            target = Script.GURMUKHI if script is Script.GURMUKHI else Script.LATIN
        elif language == "en":
            if script not in (Script.LATIN, Script.NEUTRAL):
                raise LanguageMismatchError(
                    f"language 'en' but text script is {script.value}"
                )
            target = Script.LATIN
        else:  # "pa"
            if script not in (Script.GURMUKHI, Script.NEUTRAL):
                raise LanguageMismatchError(
                    f"language 'pa' but text script is {script.value}"
                )
            target = Script.GURMUKHI

        tokens = normalize(tokenize(text), target)
        final_punct = (
            tokens[-1].surface
            if tokens and tokens[-1].kind is TokenKind.PUNCT
            else None
        )
        phonemes = grapheme_to_phoneme(tokens, target, self.inventory)
        events = assign_prosody(phonemes, final_punct, self.inventory)
        return encode_wav(synthesize(events))


@lru_cache(maxsize=1)
def default_engine() -> Engine:
    return Engine.default()


def speak(text: str) -> bytes:
    """Speak text in its detected language using the packaged voice."""
    inventory = default_inventory()
    engine = Engine(Lexicon(), [], inventory)
    return engine.speak(text, "auto")
