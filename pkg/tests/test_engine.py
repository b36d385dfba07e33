import json

import numpy as np
import pytest

from bolpunjabi import (
    Engine,
    LanguageMismatchError,
    UnsupportedInputError,
    ValidationError,
    decode_wav,
    speak,
)
from bolpunjabi.engine import default_config, load_config
from bolpunjabi.errors import ConfigError


def test_speak_punjabi_sentence_rising_contour(engine):
    raw = engine.speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", "pa")
    assert raw[:4] == b"RIFF"
    assert len(raw) > 44
    buf = decode_wav(raw)
    assert np.max(np.abs(buf.samples)) <= 1.0


def test_speak_english_sentence(engine):
    raw = engine.speak("Who did this?", "en")
    assert raw[:4] == b"RIFF"
    assert len(raw) > 44


def test_speak_empty_is_44_bytes(engine):
    assert len(engine.speak("", "en")) == 44
    assert len(engine.speak("", "auto")) == 44


def test_module_level_speak_detects_script():
    pa = speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?")
    en = speak("Who did this?")
    assert pa[:4] == en[:4] == b"RIFF"
    assert pa != en


def test_speak_deterministic_in_process(engine):
    one = engine.speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", "auto")
    two = engine.speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", "auto")
    assert one == two


def test_speak_numbers_expand_per_language(engine):
    en = engine.speak("12", "en")
    pa = engine.speak("12", "pa")
    assert en != pa
    assert len(en) > 44 and len(pa) > 44


def test_mixed_script_rejected_under_auto(engine):
    with pytest.raises(UnsupportedInputError):
        engine.speak("hello ਕੀਤਾ", "auto")


def test_language_script_mismatch(engine):
    with pytest.raises(LanguageMismatchError):
        engine.speak("Who did this?", "pa")
    with pytest.raises(LanguageMismatchError):
        engine.speak("ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?", "en")
    with pytest.raises(LanguageMismatchError):
        engine.speak("hello ਕੀਤਾ", "en")


def test_unknown_language_rejected(engine):
    with pytest.raises(ValidationError):
        engine.speak("hello", "fr")


def test_question_contour_differs_from_statement(engine):
    question = engine.speak("ਕੀਤਾ?", "pa")
    statement = engine.speak("ਕੀਤਾ।", "pa")
    assert len(question) == len(statement)
    assert question != statement


def test_default_config_points_at_packaged_data():
    config = default_config()
    config.validate()
    assert config.lexicon_path.is_file()
    assert config.host_port() == ("127.0.0.1", 8483)


def test_load_config_round_trip(tmp_path):
    base = default_config()
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "lexicon_path": str(base.lexicon_path),
        "rules_path": str(base.rules_path),
        "voice_path": str(base.voice_path),
        "listen_address": "127.0.0.1:9001",
    }))
    config = load_config(path)
    assert config.host_port() == ("127.0.0.1", 9001)
    engine = Engine.from_config(config)
    assert engine.translate("did").text == "ਕੀਤਾ"


def test_load_config_missing_file_rejected(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.json")


def test_load_config_missing_lexicon_rejected(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"lexicon_path": str(tmp_path / "missing.tsv")}))
    with pytest.raises(ConfigError):
        load_config(path)


def test_load_config_bad_listen_rejected(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"listen_address": "nonsense"}))
    with pytest.raises(ConfigError):
        load_config(path)


def test_engine_usable_from_threads(engine):
    from concurrent.futures import ThreadPoolExecutor

    def job(_):
        return (engine.translate("Who did this?").text,
                engine.speak("ਕੀਤਾ", "pa"))

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(job, range(16)))
    texts = {t for t, _ in results}
    audios = {a for _, a in results}
    assert texts == {"ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?"}
    assert len(audios) == 1
