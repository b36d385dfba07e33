"""Canonical RIFF/WAVE encoding: PCM 16-bit signed LE, mono, 22050 Hz.

The header is the fixed 44-byte layout; samples map x -> round(x * 32767).
"""

from __future__ import annotations

import struct

import numpy as np

from .synth import AudioBuffer

_HEADER = struct.Struct("<4sI4s4sIHHIIHH4sI")
HEADER_SIZE = _HEADER.size  # 44
BITS_PER_SAMPLE = 16
CHANNELS = 1


def encode_wav(buffer: AudioBuffer) -> bytes:
    """Serialize an AudioBuffer to canonical WAV bytes."""
    samples = np.clip(np.asarray(buffer.samples, dtype=np.float64), -1.0, 1.0)
    pcm = np.round(samples * 32767.0).astype("<i2")
    data = pcm.tobytes()
    rate = buffer.sample_rate
    block_align = CHANNELS * BITS_PER_SAMPLE // 8
    header = _HEADER.pack(
        b"RIFF",
        36 + len(data),
        b"WAVE",
        b"fmt ",
        16,              # PCM fmt chunk size
        1,               # audio format: PCM
        CHANNELS,
        rate,
        rate * block_align,
        block_align,
        BITS_PER_SAMPLE,
        b"data",
        len(data),
    )
    return header + data


def decode_wav(raw: bytes) -> AudioBuffer:
    """Parse bytes produced by encode_wav back into an AudioBuffer."""
    if len(raw) < HEADER_SIZE:
        raise ValueError("buffer shorter than a WAV header")
    (
        riff, _riff_size, wave, fmt, fmt_size, audio_format, channels,
        rate, _byte_rate, _block_align, bits, data_tag, data_size,
    ) = _HEADER.unpack_from(raw)
    if riff != b"RIFF" or wave != b"WAVE" or fmt != b"fmt " or data_tag != b"data":
        raise ValueError("not a canonical WAV header")
    if (audio_format, channels, bits, fmt_size) != (1, CHANNELS, BITS_PER_SAMPLE, 16):
        raise ValueError("unsupported WAV flavour")
    pcm = np.frombuffer(raw, dtype="<i2", offset=HEADER_SIZE, count=data_size // 2)
    return AudioBuffer(pcm.astype(np.float64) / 32767.0, rate)
