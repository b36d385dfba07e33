"""Source-filter formant synthesis to mono PCM samples.

Voiced phonemes excite a cascade of three digital resonators with a
glottal pulse train at the interpolated pitch; fricatives use a seeded
noise source; stops get a closure-then-burst envelope; silence is
silence.  A first-difference radiation filter and peak normalization to
0.9 finish the buffer.  Output is byte-deterministic for fixed input:
the noise generator is re-seeded per call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import lfilter

from .g2p import PhonemeKind
from .prosody import PhonemeEvent

SAMPLE_RATE = 22050
PEAK_LEVEL = 0.9
FORMANT_BANDWIDTHS = (80.0, 90.0, 120.0)
GLOTTAL_BANDWIDTH = 100.0
NOISE_SEED = 22050
_PHASE_RESET = 0.95  # first glottal pulse lands ~1 ms into a voiced onset

NASALS = frozenset({"m", "n", "nn", "ng", "ny"})
APPROXIMANTS = frozenset({"y", "r", "l", "ll", "v", "rr"})
FRICATIVES_VOICELESS = frozenset({"s", "sh", "f", "h"})
FRICATIVES_VOICED = frozenset({"z"})
STOPS_VOICELESS = frozenset({"k", "kh", "ch", "chh", "tt", "tth", "t", "th", "p", "ph"})
STOPS_VOICED = frozenset({"g", "gh", "j", "jh", "dd", "ddh", "d", "dh", "b", "bh"})


@dataclass(frozen=True)
class AudioBuffer:
    """Mono samples in [-1, 1] at a fixed rate."""

    samples: np.ndarray = field(default_factory=lambda: np.zeros(0))
    sample_rate: int = SAMPLE_RATE

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration_seconds(self) -> float:
        return len(self.samples) / self.sample_rate


def _resonator(x: np.ndarray, freq: float, bandwidth: float, fs: int) -> np.ndarray:
    """Two-pole digital resonator, unit gain at DC-adjusted resonance."""
    dt = 1.0 / fs
    c = -math.exp(-2.0 * math.pi * bandwidth * dt)
    b = 2.0 * math.exp(-math.pi * bandwidth * dt) * math.cos(2.0 * math.pi * freq * dt)
    a = 1.0 - b - c
    return lfilter([a], [1.0, -b, -c], x)


def _source_mix(symbol: str, kind: PhonemeKind) -> tuple[float, float, bool]:
    """(voiced amplitude, noise amplitude, burst envelope) per phoneme class."""
    if kind is PhonemeKind.VOWEL:
        return 1.0, 0.0, False
    if symbol in NASALS:
        return 0.7, 0.0, False
    if symbol in APPROXIMANTS:
        return 0.8, 0.0, False
    if symbol in FRICATIVES_VOICELESS:
        return 0.0, 0.8, False
    if symbol in FRICATIVES_VOICED:
        return 0.5, 0.5, False
    if symbol in STOPS_VOICED:
        return 0.5, 0.1, True
    if symbol in STOPS_VOICELESS:
        return 0.0, 0.6, True
    return 0.8, 0.0, False  # unclassified consonant: treat as approximant


def _pulse_train(pitch_hz: np.ndarray, phase: float, fs: int) -> tuple[np.ndarray, float]:
    """Impulse train whose spacing follows the per-sample pitch curve."""
    acc = phase + np.cumsum(pitch_hz / fs)
    ticks = np.floor(acc)
    prev = np.concatenate(([math.floor(phase)], ticks[:-1]))
    pulses = (ticks > prev).astype(float)
    return pulses, float(acc[-1] % 1.0)


def synthesize(events: list[PhonemeEvent], sample_rate: int = SAMPLE_RATE) -> AudioBuffer:
    """Render phoneme events to a peak-normalized sample buffer."""
    rng = np.random.default_rng(NOISE_SEED)
    chunks: list[np.ndarray] = []
    phase = _PHASE_RESET
    for event in events:
        event.validate()
        n = round(event.duration_ms * sample_rate / 1000.0)
        if event.phoneme.kind is PhonemeKind.SILENCE:
            chunks.append(np.zeros(n))
            phase = _PHASE_RESET
            continue

        voiced_amp, noise_amp, burst = _source_mix(
            event.phoneme.symbol, event.phoneme.kind
        )
        source = np.zeros(n)
        if voiced_amp:
            pitch = np.linspace(event.pitch_start, event.pitch_end, n)
            pulses, phase = _pulse_train(pitch, phase, sample_rate)
            # Glottal shaping: low-pass resonator rolls off the pulse spectrum.
            source += voiced_amp * _resonator(
                pulses, 0.0, GLOTTAL_BANDWIDTH, sample_rate
            )
        if noise_amp:
            noise = noise_amp * 0.05 * rng.standard_normal(n)
            if burst:
                noise[: int(n * 0.6)] = 0.0  # closure before the release burst
            source += noise

        rendered = source
        for freq, bandwidth in zip(event.formants, FORMANT_BANDWIDTHS):
            rendered = _resonator(rendered, freq, bandwidth, sample_rate)
        rendered = np.diff(rendered, prepend=0.0)  # radiation characteristic
        chunks.append(rendered)

    samples = np.concatenate(chunks) if chunks else np.zeros(0)
    peak = float(np.max(np.abs(samples))) if len(samples) else 0.0
    if peak > 0.0:
        samples = samples * (PEAK_LEVEL / peak)
    return AudioBuffer(samples, sample_rate)
