"""Word-by-word English to Punjabi translation with rule-driven reordering.

The pipeline substitutes each token from the lexicon (picking the candidate
whose tags best fit the sentence context), then applies the first reorder
rule whose role pattern matches, turning English SVO order into Punjabi
SOV order.  Out-of-vocabulary words pass through verbatim and flagged.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

from .errors import RuleFormatError, UnsupportedDirectionError
from .lexicon import Candidate, Lexicon, feature_value
from .text import Script, Token, TokenKind, detect_script, normalize, tokenize

ROLE_PUNCT = "PUNCT"
ROLE_OOV = "OOV"

# Roles a rule pattern may constrain on.
PATTERN_ROLES = frozenset({"WH", "VERB", "PRONOUN", "NOUN", "OBJECT", "PUNCT"})

# Context words that imply a plural addressee; lexicon authors can extend
# this via the plural_cues argument of select_candidate/substitute.
DEFAULT_PLURAL_CUES = ("all", "both")

_DEFAULT_ROLE = "NOUN"


@dataclass(frozen=True)
class Chunk:
    """One translated unit: possibly multi-word Gurmukhi plus a role tag."""

    source: Token
    gurmukhi: str
    role: str
    oov: bool = False


@dataclass(frozen=True)
class ReorderRule:
    name: str
    pattern: tuple[str, ...]
    permutation: tuple[int, ...]

    def validate(self) -> None:
        if len(self.pattern) < 2:
            raise RuleFormatError(f"rule {self.name!r}: pattern shorter than 2")
        bad = [r for r in self.pattern if r not in PATTERN_ROLES]
        if bad:
            raise RuleFormatError(f"rule {self.name!r}: unknown roles {bad}")
        if sorted(self.permutation) != list(range(len(self.pattern))):
            raise RuleFormatError(
                f"rule {self.name!r}: permutation {list(self.permutation)} is not "
                f"a permutation of 0..{len(self.pattern) - 1}"
            )


@dataclass(frozen=True)
class TranslationResult:
    chunks: tuple[Chunk, ...]
    text: str
    applied_rules: tuple[str, ...] = ()
    oov_count: int = 0


def load_rules(source: io.IOBase | io.TextIOBase | str) -> list[ReorderRule]:
    """Parse a rule file: ``name<TAB>roles,comma,separated<TAB>permutation``.

    ``#`` lines and blank lines are skipped.  Invalid permutations and
    unknown roles are rejected here, never at reorder time.
    """
    if isinstance(source, str):
        text = source
    elif isinstance(source, (io.RawIOBase, io.BufferedIOBase)):
        text = source.read().decode("utf-8")
    else:
        text = source.read()
    rules: list[ReorderRule] = []
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise RuleFormatError(
                f"expected 3 tab-separated fields, got {len(fields)}", line_no
            )
        name, raw_pattern, raw_perm = (f.strip() for f in fields)
        if not name:
            raise RuleFormatError("empty rule name", line_no)
        pattern = tuple(p.strip() for p in raw_pattern.split(","))
        try:
            permutation = tuple(int(p) for p in raw_perm.split(","))
        except ValueError:
            raise RuleFormatError(
                f"invalid permutation {raw_perm!r}", line_no
            ) from None
        rule = ReorderRule(name, pattern, permutation)
        try:
            rule.validate()
        except RuleFormatError as exc:
            raise RuleFormatError(str(exc), line_no) from None
        rules.append(rule)
    return rules


def _context_features(
    token: Token,
    context: list[Token],
    lexicon: Lexicon | None,
    plural_cues: tuple[str, ...],
) -> dict[str, str]:
    """Features implied by the surrounding sentence.

    A plural cue word (or a plural noun found in the lexicon) implies a
    plural reading; the register defaults to formal.  Sentence-final "?"
    deliberately implies nothing about number.
    """
    inferred = {"register": "FORMAL"}
    for other in context:
        if other.index == token.index:
            continue
        surface = other.surface.casefold()
        if surface in plural_cues:
            inferred["number"] = "PLURAL"
            continue
        if lexicon is not None:
            for cand in lexicon.lookup(surface):
                if (
                    feature_value(cand.features, "role") == "NOUN"
                    and feature_value(cand.features, "number") == "PLURAL"
                ):
                    inferred["number"] = "PLURAL"
                    break
    return inferred


def _consistent(candidate: Candidate, inferred: dict[str, str]) -> bool:
    for dimension, wanted in inferred.items():
        tagged = feature_value(candidate.features, dimension)
        if tagged is not None and tagged != wanted:
            return False
    return True


def select_candidate(
    token: Token,
    candidates: list[Candidate],
    context: list[Token],
    *,
    lexicon: Lexicon | None = None,
    plural_cues: tuple[str, ...] = DEFAULT_PLURAL_CUES,
) -> Candidate:
    """Pick the first candidate consistent with the sentence context.

    Candidates arrive in priority order; when none is consistent the
    lowest-priority candidate wins, so a result is guaranteed.
    """
    if not candidates:
        raise ValueError("select_candidate requires a non-empty candidate list")
    inferred = _context_features(token, context, lexicon, plural_cues)
    for candidate in candidates:
        if _consistent(candidate, inferred):
            return candidate
    return candidates[0]


def substitute(
    tokens: list[Token],
    lexicon: Lexicon,
    *,
    plural_cues: tuple[str, ...] = DEFAULT_PLURAL_CUES,
) -> list[Chunk]:
    """Replace each token with its best lexicon candidate, in source order."""
    chunks: list[Chunk] = []
    for token in tokens:
        if token.kind is TokenKind.PUNCT:
            chunks.append(Chunk(token, token.surface, ROLE_PUNCT))
            continue
        candidates = lexicon.lookup(token.surface)
        if not candidates:
            chunks.append(Chunk(token, token.surface, ROLE_OOV, oov=True))
            continue
        chosen = select_candidate(
            token, candidates, tokens, lexicon=lexicon, plural_cues=plural_cues
        )
        role = feature_value(chosen.features, "role") or _DEFAULT_ROLE
        if role == ROLE_PUNCT:
            role = _DEFAULT_ROLE  # PUNCT role is reserved for punctuation tokens
        chunks.append(Chunk(token, chosen.gurmukhi, role))
    return chunks


def _matches(rule: ReorderRule, chunks: list[Chunk]) -> bool:
    """Pattern anchored at the start; trailing chunks must all be PUNCT.

    OOV chunks satisfy OBJECT constraints (untranslated words keep their
    object slot), never anything else.
    """
    if len(chunks) < len(rule.pattern):
        return False
    for wanted, chunk in zip(rule.pattern, chunks):
        role = chunk.role
        if role == ROLE_OOV and wanted == "OBJECT":
            continue
        if role != wanted:
            return False
    return all(c.role == ROLE_PUNCT for c in chunks[len(rule.pattern):])


def reorder(
    chunks: list[Chunk], rules: list[ReorderRule]
) -> tuple[list[Chunk], list[str]]:
    """Apply the first matching rule once; identity when none matches."""
    for rule in rules:
        if _matches(rule, chunks):
            head = [chunks[i] for i in rule.permutation]
            return head + chunks[len(rule.pattern):], [rule.name]
    return list(chunks), []


def assemble(chunks: list[Chunk]) -> str:
    """Join chunk surfaces with single spaces, none before punctuation."""
    out: list[str] = []
    for chunk in chunks:
        if out and chunk.role != ROLE_PUNCT:
            out.append(" ")
        out.append(chunk.gurmukhi)
    return "".join(out)


def translate_sentence(
    text: str,
    lexicon: Lexicon,
    rules: list[ReorderRule],
    *,
    plural_cues: tuple[str, ...] = DEFAULT_PLURAL_CUES,
) -> TranslationResult:
    """Translate one English sentence into Gurmukhi Punjabi.

    Gurmukhi or mixed-script input is rejected: only the English-to-Punjabi
    direction is supported.  Numbers expand to Punjabi words before
    substitution since the output language is Punjabi.
    """
    script = detect_script(text)
    if script in (Script.GURMUKHI, Script.MIXED):
        raise UnsupportedDirectionError(
            f"cannot translate {script.value} input; only English to Punjabi"
        )
    tokens = normalize(tokenize(text), Script.GURMUKHI)
    chunks = substitute(tokens, lexicon, plural_cues=plural_cues)
    reordered, applied = reorder(chunks, rules)
    return TranslationResult(
        chunks=tuple(reordered),
        text=assemble(reordered),
        applied_rules=tuple(applied),
        oov_count=sum(1 for c in reordered if c.oov),
    )
