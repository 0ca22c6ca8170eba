"""Deterministic pseudo-random numbers for the statistical campaigns.

A small xorshift generator with a 64-bit multiplicative output scramble.  The
point of rolling our own instead of reaching for :mod:`numpy.random` is
reproducibility of the *reports*: every trial of a campaign draws from its own
substream, derived from ``(seed, trial_index)`` alone, so results do not
depend on how trials are scheduled across threads and the same seed prints
the same report bytes everywhere.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15
_SCRAMBLE = 0x2545F4914F6CDD1D


def _mix64(x: int) -> int:
    """splitmix64 finalizer; bijective on 64-bit ints, good avalanche."""
    x = (x + _GOLDEN) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    """xorshift64* stream: shift-register core, multiply on the way out."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        # A zero state would be a fixed point of the shift register, so mix
        # the seed first and dodge zero explicitly.
        state = _mix64(seed & MASK64)
        self._state = state if state else _GOLDEN

    def next_word(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self._state = x
        return (x * _SCRAMBLE) & MASK64

    def bits(self, count: int) -> np.ndarray:
        """Draw `count` pseudo-random bits as a uint8 0/1 array."""
        if count < 0:
            raise ValueError("bit count must be non-negative")
        n_words = (count + 63) // 64
        buf = bytearray()
        for _ in range(n_words):
            buf += self.next_word().to_bytes(8, "big")
        return np.unpackbits(np.frombuffer(bytes(buf), dtype=np.uint8))[:count]

    def randrange(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection; unbiased."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (MASK64 + 1) - ((MASK64 + 1) % bound)
        while True:
            w = self.next_word()
            if w < limit:
                return w % bound


def substream(seed: int, index: int) -> XorShift64Star:
    """Generator for trial `index` of a campaign seeded with `seed`.

    Streams for distinct indices are decorrelated by the splitmix64 mix
    inside the constructor; identical (seed, index) pairs always yield the
    identical stream regardless of which thread asks.
    """
    return XorShift64Star((seed + (index + 1) * _GOLDEN) & MASK64)
