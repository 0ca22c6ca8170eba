"""Bit-vector helpers.

The canonical message form throughout the package is a numpy ``uint8`` array
of 0/1 values, one entry per bit, most significant bit first.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

BitsLike = Union[str, bytes, bytearray, Sequence[int], np.ndarray]


def message_to_bits(data: bytes) -> np.ndarray:
    """Expand bytes into bits, MSB of each byte first."""
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))


def bits_from_text(text: str) -> np.ndarray:
    """Parse a '0'/'1' string (whitespace ignored) into a bit array."""
    stripped = "".join(text.split())
    bad = set(stripped) - {"0", "1"}
    if bad:
        raise ValueError(f"bit string may contain only 0/1, found {sorted(bad)}")
    return np.fromiter((c == "1" for c in stripped), dtype=np.uint8, count=len(stripped))


def bits_to_text(bits: np.ndarray) -> str:
    return "".join("1" if b else "0" for b in np.asarray(bits))


def as_bit_array(message: BitsLike) -> np.ndarray:
    """Coerce any accepted message form into the canonical bit array."""
    if isinstance(message, str):
        return bits_from_text(message)
    if isinstance(message, (bytes, bytearray)):
        return message_to_bits(bytes(message))
    arr = np.asarray(message)
    if arr.ndim != 1:
        raise ValueError(f"bit array must be one-dimensional, got shape {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError("bit array entries must be 0 or 1")
    return arr.astype(np.uint8)
