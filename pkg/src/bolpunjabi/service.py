"""Stateless HTTP surface: /api/translate, /api/speak, /api/health,
plus static serving of the browser console at /.

Errors always carry a machine-readable code from the closed set
{bad-request, unsupported-direction, unsupported-input, language-mismatch,
internal}.  Gurmukhi in JSON responses is sent as-is, never ASCII-escaped.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import unquote

from .engine import LANGUAGES, Engine
from .errors import (
    EngineError,
    LanguageMismatchError,
    UnsupportedDirectionError,
    UnsupportedInputError,
    ValidationError,
)
from .translate import TranslationResult

log = logging.getLogger("bolpunjabi.service")

_STATUS_BY_CODE = {
    "bad-request": 400,
    "unsupported-direction": 422,
    "unsupported-input": 422,
    "language-mismatch": 422,
    "internal": 500,
}

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".map": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".ico": "image/x-icon",
    ".png": "image/png",
}

_PLACEHOLDER_PAGE = b"""<!doctype html>
<html><head><meta charset="utf-8"><title>bolpunjabi</title></head>
<body><h1>bolpunjabi engine</h1>
<p>The API is up: POST /api/translate, POST /api/speak, GET /api/health.</p>
<p>No web console bundle is configured (set web_root in the config).</p>
</body></html>
"""


class _BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


def result_payload(result: TranslationResult) -> dict:
    """Wire shape shared by the HTTP service and the CLI --details output."""
    return {
        "translation": result.text,
        "chunks": [
            {
                "source": chunk.source.surface,
                "gurmukhi": chunk.gurmukhi,
                "role": chunk.role,
                "oov": chunk.oov,
            }
            for chunk in result.chunks
        ],
        "applied_rules": list(result.applied_rules),
        "oov_count": result.oov_count,
    }


class EngineServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: tuple[str, int], engine: Engine,
                 web_root: Path | None = None):
        self.engine = engine
        self.web_root = Path(web_root).resolve() if web_root else None
        super().__init__(address, _Handler)


class _Handler(BaseHTTPRequestHandler):
    server: EngineServer

    # -- plumbing ---------------------------------------------------------

    def log_message(self, fmt, *args):  # keep request noise out of stderr
        log.debug("%s " + fmt, self.address_string(), *args)

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self._send(status, body, "application/json; charset=utf-8")

    def _send_error_code(self, code: str, message: str) -> None:
        status = _STATUS_BY_CODE.get(code, 500)
        self._send_json(status, {"code": code, "message": message})

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        try:
            payload = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            raise _BadRequest("request body is not valid JSON") from None
        if not isinstance(payload, dict):
            raise _BadRequest("request body must be a JSON object")
        return payload

    # -- routes -----------------------------------------------------------

    def do_GET(self):
        try:
            path = self.path.split("?", 1)[0]
            if path == "/api/health":
                self._send_json(200, {"status": "ok"})
            elif path.startswith("/api/"):
                self._send_error_code("bad-request", f"no such endpoint {path}")
            else:
                self._serve_static(path)
        except Exception as exc:  # pragma: no cover - last-resort guard
            log.exception("unhandled error on GET %s", self.path)
            self._send_error_code("internal", str(exc))

    def do_POST(self):
        path = self.path.split("?", 1)[0]
        try:
            if path == "/api/translate":
                self._handle_translate()
            elif path == "/api/speak":
                self._handle_speak()
            else:
                self._send_error_code("bad-request", f"no such endpoint {path}")
        except _BadRequest as exc:
            self._send_error_code("bad-request", exc.message)
        except (
            UnsupportedDirectionError,
            UnsupportedInputError,
            LanguageMismatchError,
            ValidationError,
        ) as exc:
            self._send_error_code(exc.code, str(exc))
        except EngineError as exc:
            log.exception("engine error on %s", path)
            self._send_error_code("internal", str(exc))
        except Exception as exc:
            log.exception("unhandled error on %s", path)
            self._send_error_code("internal", str(exc))

    # -- handlers ----------------------------------------------------------

    def _require_text(self, payload: dict) -> str:
        text = payload.get("text")
        if not isinstance(text, str):
            raise _BadRequest("field 'text' must be a string")
        return text

    def _handle_translate(self) -> None:
        text = self._require_text(self._read_json())
        result = self.server.engine.translate(text)
        self._send_json(200, result_payload(result))

    def _handle_speak(self) -> None:
        payload = self._read_json()
        text = self._require_text(payload)
        language = payload.get("language", "auto")
        if language not in LANGUAGES:
            raise _BadRequest(f"field 'language' must be one of {list(LANGUAGES)}")
        audio = self.server.engine.speak(text, language)
        self._send(200, audio, "audio/wav")

    def _serve_static(self, path: str) -> None:
        root = self.server.web_root
        if root is None:
            if path in ("/", "/index.html"):
                self._send(200, _PLACEHOLDER_PAGE, "text/html; charset=utf-8")
            else:
                self._send(404, b"not found\n", "text/plain; charset=utf-8")
            return
        relative = unquote(path).lstrip("/") or "index.html"
        target = (root / relative).resolve()
        if not target.is_relative_to(root) or not target.is_file():
            self._send(404, b"not found\n", "text/plain; charset=utf-8")
            return
        content_type = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), content_type)


def make_server(
    engine: Engine,
    host: str = "127.0.0.1",
    port: int = 8483,
    web_root: Path | None = None,
) -> EngineServer:
    """Bind (but do not start) the HTTP server; port 0 picks a free port."""
    return EngineServer((host, port), engine, web_root)
