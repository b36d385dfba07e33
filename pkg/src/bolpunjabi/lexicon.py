"""Bilingual English-to-Punjabi lexicon: load, query, author, serialize.

The on-disk format is a UTF-8 tab-separated file with LF line endings:

    #punjabi-lexicon v1
    headword<TAB>gurmukhi<TAB>priority<TAB>comma-separated-features

``#`` lines are comments, blank lines are ignored.  One headword may span
several records; they merge into a single entry ordered by priority.
"""

from __future__ import annotations

import io
import unicodedata
from dataclasses import dataclass, field

from .errors import LexiconFormatError, ValidationError

LEXICON_HEADER = "#punjabi-lexicon v1"

GURMUKHI_BLOCK = range(0x0A00, 0x0A80)

# Closed feature vocabulary; unknown tags are rejected at load time.
FEATURE_DIMENSIONS: dict[str, frozenset[str]] = {
    "role": frozenset({"WH", "VERB", "PRONOUN", "NOUN", "OBJECT", "PUNCT"}),
    "number": frozenset({"SINGULAR", "PLURAL"}),
    "register": frozenset({"FORMAL", "INFORMAL"}),
    "person": frozenset({"FIRST", "SECOND", "THIRD"}),
}


def _is_gurmukhi_text(text: str) -> bool:
    """True when every letter codepoint falls in the Gurmukhi block."""
    for ch in text:
        if ch.isspace():
            continue
        if unicodedata.category(ch).startswith("L") and ord(ch) not in GURMUKHI_BLOCK:
            return False
    return True


def parse_features(spec: str) -> frozenset[str]:
    """Parse ``role=WH,number=PLURAL`` into a validated tag set."""
    tags: dict[str, str] = {}
    if not spec.strip():
        return frozenset()
    for raw in spec.split(","):
        tag = raw.strip()
        if "=" not in tag:
            raise ValidationError(f"malformed feature tag {tag!r}")
        dim, value = tag.split("=", 1)
        allowed = FEATURE_DIMENSIONS.get(dim)
        if allowed is None:
            raise ValidationError(f"unknown feature dimension {dim!r}")
        if value not in allowed:
            raise ValidationError(f"unknown value {value!r} for feature {dim!r}")
        if dim in tags and tags[dim] != value:
            raise ValidationError(f"conflicting values for feature {dim!r}")
        tags[dim] = value
    return frozenset(f"{d}={v}" for d, v in tags.items())


def feature_value(features: frozenset[str], dimension: str) -> str | None:
    """The value tagged for ``dimension``, or None when untagged."""
    prefix = dimension + "="
    for tag in features:
        if tag.startswith(prefix):
            return tag[len(prefix):]
    return None


@dataclass(frozen=True)
class Candidate:
    """One Punjabi substitution target with its grammatical tags."""

    gurmukhi: str
    features: frozenset[str] = frozenset()
    priority: int = 0

    def validate(self) -> None:
        if not self.gurmukhi:
            raise ValidationError("candidate gurmukhi string is empty")
        if not _is_gurmukhi_text(self.gurmukhi):
            raise ValidationError(
                f"non-Gurmukhi letters in candidate {self.gurmukhi!r}"
            )
        if self.priority < 0:
            raise ValidationError(f"negative priority {self.priority}")
        # Re-validates tags that did not come through parse_features.
        parse_features(",".join(sorted(self.features)))

    def identity(self) -> tuple[str, frozenset[str]]:
        return (self.gurmukhi, self.features)


@dataclass(frozen=True)
class LexiconEntry:
    headword: str
    candidates: tuple[Candidate, ...]

    def __post_init__(self):
        if not self.candidates:
            raise ValidationError(f"entry {self.headword!r} has no candidates")


@dataclass(frozen=True)
class Lexicon:
    """Immutable headword -> candidates map; share freely across threads."""

    entries: dict[str, LexiconEntry] = field(default_factory=dict)
    version: str = "v1"

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, surface: str) -> bool:
        return surface.casefold() in self.entries

    def lookup(self, surface: str) -> list[Candidate]:
        """Candidates for the case-folded surface, in priority order."""
        entry = self.entries.get(surface.casefold())
        if entry is None:
            return []
        return list(entry.candidates)

    def add_entry(self, headword: str, candidate: Candidate) -> "Lexicon":
        """A new lexicon with the candidate added under the folded headword.

        Re-adding a candidate already present (same gurmukhi and features)
        is a no-op; a priority collision with an existing candidate stores
        the newcomer at max priority + 1.
        """
        headword = headword.strip().casefold()
        if not headword or any(ch.isspace() for ch in headword):
            raise ValidationError(f"invalid headword {headword!r}")
        candidate.validate()

        existing = self.entries.get(headword)
        if existing is None:
            merged = (candidate,)
        else:
            if any(c.identity() == candidate.identity() for c in existing.candidates):
                return self
            taken = {c.priority for c in existing.candidates}
            if candidate.priority in taken:
                candidate = Candidate(
                    candidate.gurmukhi, candidate.features, max(taken) + 1
                )
            merged = tuple(
                sorted(
                    existing.candidates + (candidate,), key=lambda c: c.priority
                )
            )
        entries = dict(self.entries)
        entries[headword] = LexiconEntry(headword, merged)
        return Lexicon(entries, self.version)


def load_lexicon(source: io.IOBase | io.TextIOBase) -> Lexicon:
    """Parse a lexicon stream (bytes or text) into a Lexicon.

    Raises LexiconFormatError naming the offending line on any malformed
    record, unknown feature tag, non-Gurmukhi target, or conflicting
    duplicate.
    """
    if isinstance(source, (io.RawIOBase, io.BufferedIOBase)):
        text = source.read().decode("utf-8")
    else:
        text = source.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    staged: dict[str, dict[tuple[str, frozenset[str]], Candidate]] = {}
    version = "v1"
    saw_header = False

    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            if not saw_header:
                if line.strip() != LEXICON_HEADER:
                    raise LexiconFormatError(
                        f"expected header {LEXICON_HEADER!r}, got {line.strip()!r}",
                        line_no,
                    )
                saw_header = True
                version = line.strip().rsplit(" ", 1)[-1]
            continue
        if not saw_header:
            raise LexiconFormatError(f"missing header {LEXICON_HEADER!r}", line_no)

        fields = line.split("\t")
        if len(fields) != 4:
            raise LexiconFormatError(
                f"expected 4 tab-separated fields, got {len(fields)}", line_no
            )
        raw_head, gurmukhi, raw_priority, raw_features = fields
        headword = raw_head.strip().casefold()
        if not headword or any(ch.isspace() for ch in headword):
            raise LexiconFormatError(f"invalid headword {raw_head!r}", line_no)
        try:
            priority = int(raw_priority)
        except ValueError:
            raise LexiconFormatError(
                f"invalid priority {raw_priority!r}", line_no
            ) from None
        try:
            features = parse_features(raw_features)
            candidate = Candidate(gurmukhi, features, priority)
            candidate.validate()
        except ValidationError as exc:
            raise LexiconFormatError(str(exc), line_no) from None

        bucket = staged.setdefault(headword, {})
        prior = bucket.get(candidate.identity())
        if prior is not None:
            if prior.priority != candidate.priority:
                raise LexiconFormatError(
                    f"duplicate candidate {gurmukhi!r} for {headword!r} "
                    f"with conflicting priority", line_no,
                )
            continue  # verbatim repeat: idempotent
        if any(c.priority == priority for c in bucket.values()):
            raise LexiconFormatError(
                f"priority {priority} already used for {headword!r}", line_no
            )
        bucket[candidate.identity()] = candidate

    entries = {
        head: LexiconEntry(
            head, tuple(sorted(bucket.values(), key=lambda c: c.priority))
        )
        for head, bucket in staged.items()
    }
    return Lexicon(entries, version)


def lookup(lexicon: Lexicon, surface: str) -> list[Candidate]:
    return lexicon.lookup(surface)


def add_entry(lexicon: Lexicon, headword: str, candidate: Candidate) -> Lexicon:
    return lexicon.add_entry(headword, candidate)


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Render a lexicon back to the flat-file format (stable ordering)."""
    out = [LEXICON_HEADER]
    for headword in sorted(lexicon.entries):
        for cand in lexicon.entries[headword].candidates:
            features = ",".join(sorted(cand.features))
            out.append(f"{headword}\t{cand.gurmukhi}\t{cand.priority}\t{features}")
    return "\n".join(out) + "\n"
