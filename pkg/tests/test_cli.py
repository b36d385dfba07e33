import json
import os
import subprocess
import sys

import pytest

ENV = {**os.environ, "PYTHONIOENCODING": "utf-8"}


def run(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "bolpunjabi", *args],
        capture_output=True, text=True, encoding="utf-8", env=ENV,
        timeout=120, **kwargs,
    )


def test_translate_prints_golden_sentence():
    proc = run("translate", "Who did this?")
    assert proc.returncode == 0
    assert proc.stdout == "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?\n"


def test_translate_empty_prints_empty_line():
    proc = run("translate", "")
    assert proc.returncode == 0
    assert proc.stdout == "\n"


def test_translate_details_json():
    proc = run("translate", "Who did this?", "--details")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["translation"] == "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?"
    assert payload["applied_rules"] == ["wh-fronting"]
    assert payload["oov_count"] == 0
    assert "ਕਿਸ ਨੇ" in proc.stdout  # human-readable, not ASCII-escaped


def test_translate_gurmukhi_input_fails_with_diagnostic():
    proc = run("translate", "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?")
    assert proc.returncode == 1
    assert "error" in proc.stderr.lower()


def test_speak_writes_riff_file(tmp_path):
    out = tmp_path / "out.wav"
    proc = run("speak", "--lang", "pa", "--out", str(out), "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?")
    assert proc.returncode == 0
    raw = out.read_bytes()
    assert raw[:4] == b"RIFF"
    assert len(raw) > 44


def test_speak_auto_language(tmp_path):
    out = tmp_path / "auto.wav"
    proc = run("speak", "--out", str(out), "Who did this?")
    assert proc.returncode == 0
    assert out.read_bytes()[:4] == b"RIFF"


def test_speak_mismatch_fails(tmp_path):
    out = tmp_path / "never.wav"
    proc = run("speak", "--lang", "pa", "--out", str(out), "hello")
    assert proc.returncode == 1
    assert not out.exists()


def test_unknown_subcommand_is_usage_error():
    proc = run("frobnicate")
    assert proc.returncode == 2


def test_missing_lexicon_file_is_startup_error(tmp_path):
    proc = run("translate", "hi", "--lexicon", str(tmp_path / "missing.tsv"))
    assert proc.returncode == 1
    assert "missing" in proc.stderr


def test_cli_and_library_agree(engine):
    proc = run("translate", "I eat bread.")
    assert proc.stdout.rstrip("\n") == engine.translate("I eat bread.").text


def test_speak_byte_identical_across_processes(tmp_path):
    """Two separate interpreter invocations produce the same WAV bytes."""
    first, second = tmp_path / "a.wav", tmp_path / "b.wav"
    assert run("speak", "--lang", "pa", "--out", str(first),
               "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?").returncode == 0
    assert run("speak", "--lang", "pa", "--out", str(second),
               "ਇਹ ਕਿਸ ਨੇ ਕੀਤਾ?").returncode == 0
    assert first.read_bytes() == second.read_bytes()


def test_serve_rejects_bad_config(tmp_path):
    config = tmp_path / "config.json"
    config.write_text("{broken json")
    proc = run("serve", "--config", str(config))
    assert proc.returncode == 1
    assert "config" in proc.stderr


def test_serve_env_var_fallback(tmp_path):
    config = tmp_path / "config.json"
    config.write_text("{broken json")
    proc = subprocess.run(
        [sys.executable, "-m", "bolpunjabi", "serve"],
        capture_output=True, text=True, encoding="utf-8",
        env={**ENV, "PB_CONFIG": str(config)}, timeout=120,
    )
    assert proc.returncode == 1
    assert "config" in proc.stderr


def test_serve_subcommand_answers_health(tmp_path):
    import json as jsonlib
    import socket
    import time
    import urllib.request

    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    config = tmp_path / "config.json"
    config.write_text(jsonlib.dumps({"listen_address": f"127.0.0.1:{port}"}))

    proc = subprocess.Popen(
        [sys.executable, "-m", "bolpunjabi", "serve", "--config", str(config)],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE, env=ENV,
    )
    try:
        deadline = time.monotonic() + 30
        body = None
        while time.monotonic() < deadline:
            try:
                with urllib.request.urlopen(
                    f"http://127.0.0.1:{port}/api/health", timeout=2
                ) as resp:
                    body = resp.read()
                break
            except OSError:
                assert proc.poll() is None, proc.stderr.read().decode()
                time.sleep(0.2)
        assert body is not None, "server never came up"
        assert jsonlib.loads(body) == {"status": "ok"}
    finally:
        proc.terminate()
        proc.wait(timeout=30)
