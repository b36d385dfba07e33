"""Duration and pitch assignment over a phoneme sequence.

Declarative sentences get a pitch contour falling linearly from 140 Hz to
100 Hz across the utterance.  A final "?" keeps the fall over the first
60% of the total duration and then rises to 180 Hz at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .g2p import Phoneme, PhonemeKind, VoiceInventory, default_inventory

PITCH_START = 140.0
PITCH_END = 100.0
QUESTION_PEAK = 180.0
QUESTION_RISE_FRACTION = 0.4

MIN_PITCH = 60.0
MAX_PITCH = 400.0
MIN_DURATION_MS = 20.0
MAX_DURATION_MS = 600.0


@dataclass(frozen=True)
class PhonemeEvent:
    """A phoneme with its assigned duration, pitch and formant targets."""

    phoneme: Phoneme
    duration_ms: float
    pitch_start: float
    pitch_end: float
    formants: tuple[float, float, float] | None

    def validate(self) -> None:
        if not MIN_DURATION_MS <= self.duration_ms <= MAX_DURATION_MS:
            raise ValueError(f"duration {self.duration_ms} ms outside bounds")
        for pitch in (self.pitch_start, self.pitch_end):
            if not MIN_PITCH <= pitch <= MAX_PITCH:
                raise ValueError(f"pitch {pitch} Hz outside bounds")
        if self.formants is not None:
            f1, f2, f3 = self.formants
            if not f1 < f2 < f3:
                raise ValueError(f"formants not ascending: {self.formants}")
        if (self.formants is None) != (self.phoneme.kind is PhonemeKind.SILENCE):
            raise ValueError("formants must be absent exactly for SILENCE")


def _contour(rising: bool, total_ms: float):
    """Pitch as a function of time over [0, total_ms]."""
    knee = 1.0 - QUESTION_RISE_FRACTION

    def pitch(t_ms: float) -> float:
        x = t_ms / total_ms if total_ms else 0.0
        if not rising or x <= knee:
            return PITCH_START + (PITCH_END - PITCH_START) * x
        knee_pitch = PITCH_START + (PITCH_END - PITCH_START) * knee
        return knee_pitch + (QUESTION_PEAK - knee_pitch) * (x - knee) / (1.0 - knee)

    return pitch


def assign_prosody(
    phonemes: list[Phoneme],
    sentence_final_punct: str | None = None,
    inventory: VoiceInventory | None = None,
) -> list[PhonemeEvent]:
    """Attach durations (from the inventory) and a pitch contour."""
    if not phonemes:
        return []
    inv = inventory or default_inventory()
    durations = [inv.item(p.symbol).duration_ms for p in phonemes]
    total = sum(durations)
    pitch = _contour(rising=(sentence_final_punct == "?"), total_ms=total)

    events: list[PhonemeEvent] = []
    elapsed = 0.0
    for phoneme, duration in zip(phonemes, durations):
        events.append(
            PhonemeEvent(
                phoneme=phoneme,
                duration_ms=duration,
                pitch_start=pitch(elapsed),
                pitch_end=pitch(elapsed + duration),
                formants=inv.item(phoneme.symbol).formants,
            )
        )
        elapsed += duration
    return events
