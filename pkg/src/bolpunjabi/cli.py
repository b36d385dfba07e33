"""Command-line interface: translate, speak, serve."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .engine import (
    CONFIG_ENV_VAR,
    Engine,
    EngineConfig,
    default_config,
    load_config,
)
from .errors import EngineError
from .service import make_server, result_payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bolpunjabi",
        description="Translate English to Punjabi and speak either language.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_engine_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lexicon", type=Path, help="lexicon.tsv override")
        p.add_argument("--rules", type=Path, help="rules.tsv override")
        p.add_argument("--voice", type=Path, help="voice.tsv override")

    translate = sub.add_parser("translate", help="translate English text to Punjabi")
    translate.add_argument("text")
    translate.add_argument(
        "--details", action="store_true",
        help="print chunks, applied rules and OOV count as JSON",
    )
    add_engine_options(translate)

    speak = sub.add_parser("speak", help="render text to a WAV file")
    speak.add_argument("text")
    speak.add_argument("--lang", choices=("en", "pa", "auto"), default="auto")
    speak.add_argument("--out", type=Path, required=True, help="output WAV path")
    add_engine_options(speak)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument(
        "--config", type=Path,
        help=f"JSON config path (falls back to ${CONFIG_ENV_VAR})",
    )
    return parser


def _engine_from_args(args: argparse.Namespace) -> Engine:
    base = default_config()
    config = EngineConfig(
        lexicon_path=args.lexicon or base.lexicon_path,
        rules_path=args.rules or base.rules_path,
        voice_path=args.voice or base.voice_path,
    )
    return Engine.from_config(config)


def _cmd_translate(args: argparse.Namespace) -> int:
    engine = _engine_from_args(args)
    result = engine.translate(args.text)
    if args.details:
        print(json.dumps(result_payload(result), ensure_ascii=False, indent=2))
    else:
        print(result.text)
    return 0


def _cmd_speak(args: argparse.Namespace) -> int:
    engine = _engine_from_args(args)
    audio = engine.speak(args.text, args.lang)
    args.out.write_bytes(audio)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    config = load_config(config_path) if config_path else default_config()
    engine = Engine.from_config(config)
    host, port = config.host_port()
    server = make_server(engine, host, port, config.web_root)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    logging.getLogger("bolpunjabi").info(
        "listening on http://%s:%d/", *server.server_address[:2]
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "translate": _cmd_translate,
        "speak": _cmd_speak,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())
