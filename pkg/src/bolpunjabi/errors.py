"""Exception types shared by the engine modules.

Request-level errors carry a machine-readable ``code`` used verbatim by the
HTTP service; load-time errors carry enough position info to fix the file.
"""


class EngineError(Exception):
    """Base class for every error raised by this package."""

    code = "internal"


class LexiconFormatError(EngineError):
    """A lexicon file violates the flat-file format."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class RuleFormatError(EngineError):
    """A reorder-rule file violates the rule-file format."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class VoiceFormatError(EngineError):
    """A voice inventory file violates the inventory format."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ValidationError(EngineError):
    """A domain value violates its invariants (bad candidate, bad token)."""

    code = "bad-request"


class NormalizationError(EngineError):
    """A NUMBER token cannot be expanded to words."""

    code = "bad-request"

    def __init__(self, message: str, surface: str | None = None):
        self.surface = surface
        super().__init__(message)


class G2PError(EngineError):
    """A codepoint outside the supported set reached grapheme-to-phoneme."""

    code = "unsupported-input"

    def __init__(self, codepoint: str, context: str = ""):
        self.codepoint = codepoint
        detail = f" in {context!r}" if context else ""
        super().__init__(
            f"unsupported codepoint U+{ord(codepoint):04X} ({codepoint!r}){detail}"
        )


class UnsupportedDirectionError(EngineError):
    """Translation requested for a direction other than English to Punjabi."""

    code = "unsupported-direction"


class UnsupportedInputError(EngineError):
    """Input text cannot be spoken (mixed scripts under auto-detection)."""

    code = "unsupported-input"


class LanguageMismatchError(EngineError):
    """Requested speech language does not match the script of the text."""

    code = "language-mismatch"


class ConfigError(EngineError):
    """Engine configuration is unreadable or inconsistent."""
