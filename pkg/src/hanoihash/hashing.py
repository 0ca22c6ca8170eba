"""Digest pipeline: message bits -> walk -> quantized per-vertex words.

A digest is the concatenation of ``N_v`` words, one per vertex in label
order: word ``v`` is ``floor(√P(v) · 10^l) mod 2^k`` where P(v) is the final
vertex probability of the message-controlled walk.  Words are rendered
MSB-first; defaults give 16 words of 16 bits = 256 digest bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bits import BitsLike
from .params import HashParams
from .walk import get_engine, vertex_probabilities

_DEFAULT = HashParams()


def quantize(magnitude: float, precision: int, word_bits: int, rounding: str = "floor") -> int:
    """Map an amplitude magnitude in [0, 1] onto a k-bit word.

    ``floor`` truncates ``magnitude * 10^precision``; ``half-even`` rounds it
    (banker's rounding) for digest-compatibility experiments.  Either way the
    result is reduced mod ``2^word_bits``.
    """
    if not 0.0 <= magnitude <= 1.0:
        # Tolerate the sliver of float error √(ΣP) can accumulate, no more.
        if -1e-9 < magnitude < 0.0:
            magnitude = 0.0
        elif 1.0 < magnitude < 1.0 + 1e-9:
            magnitude = 1.0
        else:
            raise ValueError(f"magnitude must lie in [0, 1], got {magnitude}")
    scaled = magnitude * 10.0**precision
    if rounding == "floor":
        value = math.floor(scaled)
    elif rounding == "half-even":
        value = round(scaled)
    else:
        raise ValueError(f"rounding must be 'floor' or 'half-even', got {rounding!r}")
    return value % (1 << word_bits)


@dataclass(frozen=True)
class Digest:
    """Fixed-length hash value: ``len(words)`` words of ``word_bits`` bits."""

    words: tuple[int, ...]
    word_bits: int

    def __post_init__(self) -> None:
        top = 1 << self.word_bits
        for w in self.words:
            if not 0 <= w < top:
                raise ValueError(f"word {w} does not fit in {self.word_bits} bits")

    @property
    def bit_length(self) -> int:
        return len(self.words) * self.word_bits

    def to_hex(self) -> str:
        """Uppercase hex, one space-separated group per word."""
        digits = (self.word_bits + 3) // 4
        return " ".join(f"{w:0{digits}X}" for w in self.words)

    def to_bit_string(self) -> str:
        return "".join(f"{w:0{self.word_bits}b}" for w in self.words)

    def to_bits(self) -> np.ndarray:
        return np.fromiter(
            (c == "1" for c in self.to_bit_string()), dtype=np.uint8, count=self.bit_length
        )

    def to_decimal(self) -> str:
        return " ".join(str(w) for w in self.words)

    @classmethod
    def from_hex(cls, text: str, word_bits: int = 16) -> "Digest":
        words = tuple(int(group, 16) for group in text.split())
        return cls(words=words, word_bits=word_bits)


def digest(message: BitsLike, params: HashParams | None = None) -> Digest:
    """Hash a message: evolve the walk, quantize √P(v) vertex by vertex."""
    params = params if params is not None else _DEFAULT
    engine = get_engine(params)
    probs = vertex_probabilities(engine.run(message))
    words = tuple(
        quantize(math.sqrt(p), params.precision, params.word_bits, params.rounding)
        for p in probs
    )
    return Digest(words=words, word_bits=params.word_bits)


def format_hex(d: Digest) -> str:
    return d.to_hex()
