"""Parameter sets shared by the walk engine, the digest pipeline and the CLI."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Mapping


class ControlMode(enum.Enum):
    """How message bits steer the evolution: one bit or one bit-pair per step."""

    SINGLE = "single"
    TWOBIT = "twobit"


@dataclass(frozen=True)
class CoinSpec:
    """Weights placed on the two long-range coin directions.

    The reflection axis of the Grover coin is (1, 1, sqrt(l), sqrt(lt)) up to
    normalization, so ``l`` and ``lt`` control how much amplitude leaks onto
    the chord ports per step.
    """

    l: float
    lt: float

    def __post_init__(self) -> None:
        for name, value in (("l", self.l), ("lt", self.lt)):
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"coin weight {name} must be finite and >= 0, got {value}")


DEFAULT_COIN_0 = CoinSpec(0.01, 1.0)
DEFAULT_COIN_1 = CoinSpec(0.1, 0.01)
DEFAULT_COIN_01 = CoinSpec(1.0, 0.01)
DEFAULT_COIN_10 = CoinSpec(0.01, 0.1)

ROUNDING_MODES = ("floor", "half-even")
COIN_NORMS = ("unit", "literal")


@dataclass(frozen=True)
class HashParams:
    """Complete parameter set: network size, coins, quantization, control mode.

    ``coin0``/``coin1`` drive bit values 0/1 in single-bit mode and double as
    the 00/11 coins in two-bit mode, where ``coin01``/``coin10`` fill in the
    mixed pairs.  ``coin_norm='literal'`` selects a non-unit reflection axis
    (the coin is then not unitary); it exists only for digest-compatibility
    experiments and is never the default.
    """

    n: int = 4
    coin0: CoinSpec = DEFAULT_COIN_0
    coin1: CoinSpec = DEFAULT_COIN_1
    precision: int = 5
    word_bits: int = 16
    mode: ControlMode = ControlMode.SINGLE
    coin01: CoinSpec = DEFAULT_COIN_01
    coin10: CoinSpec = DEFAULT_COIN_10
    rounding: str = "floor"
    coin_norm: str = "unit"

    def __post_init__(self) -> None:
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", ControlMode(self.mode))
        if self.n < 2:
            raise ValueError(f"need at least 2 levels, got n={self.n}")
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        if self.word_bits < 1:
            raise ValueError(f"word_bits must be >= 1, got {self.word_bits}")
        if 10**self.precision < 2**self.word_bits:
            raise ValueError(
                f"quantization needs 10**precision >= 2**word_bits; "
                f"got 10**{self.precision} < 2**{self.word_bits}"
            )
        if self.rounding not in ROUNDING_MODES:
            raise ValueError(f"rounding must be one of {ROUNDING_MODES}, got {self.rounding!r}")
        if self.coin_norm not in COIN_NORMS:
            raise ValueError(f"coin_norm must be one of {COIN_NORMS}, got {self.coin_norm!r}")

    @property
    def n_vertices(self) -> int:
        return 1 << self.n

    @property
    def digest_bits(self) -> int:
        return self.n_vertices * self.word_bits

    def coin_table(self) -> tuple[CoinSpec, ...]:
        """Coin specs in coin-index order.

        Single-bit mode: (C_0, C_1).  Two-bit mode: (C_00, C_01, C_10, C_11),
        indexed by the integer value of the controlling bit-pair.
        """
        if self.mode is ControlMode.SINGLE:
            return (self.coin0, self.coin1)
        return (self.coin0, self.coin01, self.coin10, self.coin1)

    def to_flat(self) -> dict[str, object]:
        """Flat key/value view; keys double as config-file keys."""
        return {
            "n": self.n,
            "l00": self.coin0.l,
            "lt00": self.coin0.lt,
            "l11": self.coin1.l,
            "lt11": self.coin1.lt,
            "l01": self.coin01.l,
            "lt01": self.coin01.lt,
            "l10": self.coin10.l,
            "lt10": self.coin10.lt,
            "precision": self.precision,
            "word_bits": self.word_bits,
            "mode": self.mode.value,
            "rounding": self.rounding,
            "coin_norm": self.coin_norm,
        }

    @classmethod
    def from_flat(cls, values: Mapping[str, object]) -> "HashParams":
        """Build params from a flat mapping, starting from the defaults."""
        base = cls().to_flat()
        unknown = set(values) - set(base)
        if unknown:
            raise ValueError(f"unknown parameter keys: {', '.join(sorted(unknown))}")
        base.update(values)
        return cls(
            n=int(base["n"]),
            coin0=CoinSpec(float(base["l00"]), float(base["lt00"])),
            coin1=CoinSpec(float(base["l11"]), float(base["lt11"])),
            coin01=CoinSpec(float(base["l01"]), float(base["lt01"])),
            coin10=CoinSpec(float(base["l10"]), float(base["lt10"])),
            precision=int(base["precision"]),
            word_bits=int(base["word_bits"]),
            mode=ControlMode(str(base["mode"])),
            rounding=str(base["rounding"]),
            coin_norm=str(base["coin_norm"]),
        )

    def with_levels(self, n: int) -> "HashParams":
        return replace(self, n=n)
