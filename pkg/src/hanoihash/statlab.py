"""Statistical evaluation of the digest pipeline.

Campaigns measure the hash the way one evaluates any avalanche-style
construction: flip one message bit, compare digests.

* diffusion: Hamming-distance statistics (B_min, B_max, B̄, P, ΔB, ΔP);
* uniformity: per-bit-position flip counts T_i and complements T̃_i;
* collision: per-position word-equality counts ω against a binomial model;
* scaling: collision rates across network sizes;
* sensitivity: digests of one message and four single-edit variants.

Every trial draws from its own substream of the campaign seed, so reports
are byte-identical no matter how many worker threads map the trials.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .bits import BitsLike, as_bit_array, bits_to_text
from .hashing import Digest, digest
from .params import HashParams
from .rng import XorShift64Star, substream


def hamming(d1: Digest, d2: Digest) -> int:
    """Number of differing bit positions between two equal-geometry digests."""
    if d1.bit_length != d2.bit_length or d1.word_bits != d2.word_bits:
        raise ValueError(
            f"digest geometry mismatch: {len(d1.words)}x{d1.word_bits} vs "
            f"{len(d2.words)}x{d2.word_bits} bits"
        )
    return int(np.count_nonzero(d1.to_bits() != d2.to_bits()))


class PerturbKind(enum.Enum):
    """The four single-edit message perturbations used by the sensitivity suite."""

    FLIP_ONE_TO_ZERO = "flip-one-to-zero"
    FLIP_ZERO_TO_ONE = "flip-zero-to-one"
    INSERT_BIT = "insert-bit"
    DELETE_BIT = "delete-bit"


def perturb(message: BitsLike, kind: PerturbKind, rng: XorShift64Star) -> np.ndarray:
    """Apply one edit of the given kind at a uniformly random valid position."""
    bits = as_bit_array(message)
    if bits.size == 0:
        raise ValueError("message must contain at least one bit")
    if kind in (PerturbKind.FLIP_ONE_TO_ZERO, PerturbKind.FLIP_ZERO_TO_ONE):
        wanted = 1 if kind is PerturbKind.FLIP_ONE_TO_ZERO else 0
        positions = np.flatnonzero(bits == wanted)
        if positions.size == 0:
            raise ValueError(f"message has no {wanted}-bit to flip")
        out = bits.copy()
        out[positions[rng.randrange(positions.size)]] ^= 1
        return out
    if kind is PerturbKind.INSERT_BIT:
        # Position first, then the inserted value: two draws, fixed order.
        pos = rng.randrange(bits.size + 1)
        value = int(rng.bits(1)[0])
        return np.insert(bits, pos, np.uint8(value))
    pos = rng.randrange(bits.size)
    return np.delete(bits, pos)


def flip_random_bit(message: BitsLike, rng: XorShift64Star) -> tuple[np.ndarray, int]:
    """Flip one uniformly chosen bit; returns (new message, position)."""
    bits = as_bit_array(message)
    if bits.size == 0:
        raise ValueError("message must contain at least one bit")
    pos = rng.randrange(bits.size)
    out = bits.copy()
    out[pos] ^= 1
    return out, pos


def random_message(bit_length: int, rng: XorShift64Star) -> np.ndarray:
    if bit_length < 1:
        raise ValueError(f"message bit length must be >= 1, got {bit_length}")
    return rng.bits(bit_length)


@dataclass(frozen=True)
class CampaignConfig:
    """Everything a campaign run depends on; equal configs give equal reports."""

    trials: int
    message_bits: int = 24
    seed: int = 0
    params: HashParams = HashParams()

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"need at least 1 trial, got {self.trials}")
        if self.message_bits < 1:
            raise ValueError(f"need at least 1 message bit, got {self.message_bits}")

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "message_bits": self.message_bits,
            "seed": self.seed,
            "params": self.params.to_flat(),
        }


def _digest_pair(config: CampaignConfig, index: int) -> tuple[Digest, Digest]:
    """Trial body shared by diffusion/uniformity/collision: message + 1-bit flip."""
    rng = substream(config.seed, index)
    m1 = random_message(config.message_bits, rng)
    m2, _ = flip_random_bit(m1, rng)
    return digest(m1, config.params), digest(m2, config.params)


def _map_trials(fn: Callable[[int], object], count: int, workers: int) -> list:
    """Run trials 0..count-1, results in trial order regardless of workers."""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, range(count)))
    return [fn(i) for i in range(count)]


def _csv_lines(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(str(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DiffusionReport:
    config: CampaignConfig
    digest_bits: int
    b_values: tuple[int, ...]
    b_min: int
    b_max: int
    b_mean: float
    p: float
    delta_b: float
    delta_p: float

    def to_json_dict(self) -> dict:
        return {
            "suite": "diffusion",
            "config": self.config.to_json_dict(),
            "digest_bits": self.digest_bits,
            "b_min": self.b_min,
            "b_max": self.b_max,
            "b_mean": self.b_mean,
            "p": self.p,
            "delta_b": self.delta_b,
            "delta_p": self.delta_p,
            "b_values": list(self.b_values),
        }

    def to_csv_text(self) -> str:
        header = ["trials", "digest_bits", "b_min", "b_max", "b_mean", "p", "delta_b", "delta_p"]
        row = [
            self.config.trials,
            self.digest_bits,
            self.b_min,
            self.b_max,
            repr(self.b_mean),
            repr(self.p),
            repr(self.delta_b),
            repr(self.delta_p),
        ]
        return _csv_lines(header, [row])


def diffusion_test(config: CampaignConfig, workers: int = 1) -> DiffusionReport:
    """Hamming-distance statistics over `trials` (message, one-bit-flip) pairs."""
    if config.trials < 2:
        raise ValueError("diffusion statistics need at least 2 trials")
    pairs = _map_trials(lambda i: _digest_pair(config, i), config.trials, workers)
    b = np.array([hamming(d1, d2) for d1, d2 in pairs], dtype=np.int64)
    bits = pairs[0][0].bit_length
    b_mean = float(b.mean())
    delta_b = float(b.std(ddof=1))
    return DiffusionReport(
        config=config,
        digest_bits=bits,
        b_values=tuple(int(x) for x in b),
        b_min=int(b.min()),
        b_max=int(b.max()),
        b_mean=b_mean,
        p=b_mean / bits,
        delta_b=delta_b,
        delta_p=delta_b / bits,
    )


@dataclass(frozen=True)
class UniformityReport:
    config: CampaignConfig
    digest_bits: int
    t: tuple[int, ...]
    t_tilde: tuple[int, ...]
    t_mean: float
    dev: float
    delta_t: float

    @property
    def flip_fractions(self) -> np.ndarray:
        return np.array(self.t, dtype=np.float64) / self.config.trials

    def to_json_dict(self) -> dict:
        return {
            "suite": "uniform",
            "config": self.config.to_json_dict(),
            "digest_bits": self.digest_bits,
            "t_mean": self.t_mean,
            "dev": self.dev,
            "delta_t": self.delta_t,
            "t": list(self.t),
            "t_tilde": list(self.t_tilde),
        }

    def to_csv_text(self) -> str:
        rows = [[i, ti, tti] for i, (ti, tti) in enumerate(zip(self.t, self.t_tilde))]
        return _csv_lines(["position", "t", "t_tilde"], rows)


def uniform_distribution_test(config: CampaignConfig, workers: int = 1) -> UniformityReport:
    """Per-position flipped/unchanged bit-pair counts over the same pair protocol."""
    if config.trials < 2:
        raise ValueError("uniformity statistics need at least 2 trials")
    pairs = _map_trials(lambda i: _digest_pair(config, i), config.trials, workers)
    bits = pairs[0][0].bit_length
    t = np.zeros(bits, dtype=np.int64)
    for d1, d2 in pairs:
        t += d1.to_bits() != d2.to_bits()
    t_mean = float(t.mean())
    return UniformityReport(
        config=config,
        digest_bits=bits,
        t=tuple(int(x) for x in t),
        t_tilde=tuple(int(config.trials - x) for x in t),
        t_mean=t_mean,
        dev=abs(t_mean - config.trials / 2.0),
        delta_t=float(t.std(ddof=1)),
    )


@dataclass(frozen=True)
class CollisionReport:
    config: CampaignConfig
    n_vertices: int
    omega_values: tuple[int, ...]
    w_e: tuple[int, ...]
    w_t_real: tuple[float, ...]
    w_t_int: tuple[int, ...]
    collision_rate: float

    def to_json_dict(self) -> dict:
        return {
            "suite": "collision",
            "config": self.config.to_json_dict(),
            "n_vertices": self.n_vertices,
            "collision_rate": self.collision_rate,
            "w_e": list(self.w_e),
            "w_t_real": list(self.w_t_real),
            "w_t_int": list(self.w_t_int),
            "omega_values": list(self.omega_values),
        }

    def to_csv_text(self) -> str:
        rows = [
            [w, self.w_e[w], repr(self.w_t_real[w]), self.w_t_int[w]]
            for w in range(self.n_vertices + 1)
        ]
        return _csv_lines(["omega", "w_e", "w_t_real", "w_t_int"], rows)


def collision_test(config: CampaignConfig, workers: int = 1) -> CollisionReport:
    """Count per-position word matches ω between each digest pair."""
    pairs = _map_trials(lambda i: _digest_pair(config, i), config.trials, workers)
    n_v = config.params.n_vertices
    omegas = [
        int(np.count_nonzero(np.equal(d1.words, d2.words))) for d1, d2 in pairs
    ]
    w_e = np.bincount(omegas, minlength=n_v + 1)
    w_t_real, w_t_int = theoretical_collision(config.trials, n_v, config.params.word_bits)
    return CollisionReport(
        config=config,
        n_vertices=n_v,
        omega_values=tuple(omegas),
        w_e=tuple(int(x) for x in w_e),
        w_t_real=w_t_real,
        w_t_int=w_t_int,
        collision_rate=1.0 - int(w_e[0]) / config.trials,
    )


def theoretical_collision(
    trials: int, n_vertices: int, word_bits: int
) -> tuple[tuple[float, ...], tuple[int, ...]]:
    """Binomial null model W_T(ω) = N·C(N_v,ω)·p^ω·(1−p)^(N_v−ω) with p = 2^−k.

    Returns the histogram twice: as floats and as integers.  The integer view
    is the exact big-integer floor of each bin — flooring never over-counts
    whole pairs, and float rounding near a .5 boundary would be at the mercy
    of accumulated error.
    """
    if trials < 1:
        raise ValueError(f"need at least 1 trial, got {trials}")
    per_word = 1 << word_bits
    den = per_word**n_vertices
    reals = []
    ints = []
    for w in range(n_vertices + 1):
        num = trials * math.comb(n_vertices, w) * (per_word - 1) ** (n_vertices - w)
        reals.append(float(Fraction(num, den)))
        ints.append(num // den)
    return tuple(reals), tuple(ints)


def theoretical_pair_collision_rate(n_vertices: int, word_bits: int) -> float:
    """1 − (1 − 2^−k)^N_v: chance a random digest pair matches in ≥ 1 word."""
    p = Fraction(1, 1 << word_bits)
    return float(1 - (1 - p) ** n_vertices)


@dataclass(frozen=True)
class ScalingRow:
    n: int
    n_vertices: int
    message_bits: int
    trials: int
    w_e0: int
    experimental_rate: float
    theoretical_rate: float


@dataclass(frozen=True)
class ScalingReport:
    config: CampaignConfig
    rows: tuple[ScalingRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "suite": "scaling",
            "config": self.config.to_json_dict(),
            "rows": [
                {
                    "n": r.n,
                    "n_vertices": r.n_vertices,
                    "message_bits": r.message_bits,
                    "trials": r.trials,
                    "w_e0": r.w_e0,
                    "experimental_rate": r.experimental_rate,
                    "theoretical_rate": r.theoretical_rate,
                }
                for r in self.rows
            ],
        }

    def to_csv_text(self) -> str:
        rows = [
            [
                r.n,
                r.n_vertices,
                r.message_bits,
                r.trials,
                r.w_e0,
                repr(r.experimental_rate),
                repr(r.theoretical_rate),
            ]
            for r in self.rows
        ]
        header = [
            "n",
            "n_vertices",
            "message_bits",
            "trials",
            "w_e0",
            "experimental_rate",
            "theoretical_rate",
        ]
        return _csv_lines(header, rows)


def scaling_experiment(
    n_list: Sequence[int], config: CampaignConfig, workers: int = 1
) -> ScalingReport:
    """Collision rate vs network size, message length 1.5 bits per vertex."""
    rows = []
    for n in n_list:
        params = config.params.with_levels(n)
        n_v = params.n_vertices
        sub = CampaignConfig(
            trials=config.trials,
            message_bits=round(1.5 * n_v),
            seed=config.seed,
            params=params,
        )
        rep = collision_test(sub, workers=workers)
        rows.append(
            ScalingRow(
                n=n,
                n_vertices=n_v,
                message_bits=sub.message_bits,
                trials=config.trials,
                w_e0=rep.w_e[0],
                experimental_rate=rep.collision_rate,
                theoretical_rate=theoretical_pair_collision_rate(n_v, params.word_bits),
            )
        )
    return ScalingReport(config=config, rows=tuple(rows))


@dataclass(frozen=True)
class SensitivityRow:
    label: str
    message: str
    digest: Digest


@dataclass(frozen=True)
class SensitivityReport:
    seed: int
    params: HashParams
    rows: tuple[SensitivityRow, ...]
    hamming_pairs: tuple[tuple[str, str, int], ...]

    @property
    def min_distance(self) -> int:
        return min(d for _, _, d in self.hamming_pairs)

    @property
    def max_distance(self) -> int:
        return max(d for _, _, d in self.hamming_pairs)

    def to_json_dict(self) -> dict:
        return {
            "suite": "sensitivity",
            "seed": self.seed,
            "params": self.params.to_flat(),
            "rows": [
                {
                    "label": r.label,
                    "message": r.message,
                    "hex": r.digest.to_hex(),
                    "words": list(r.digest.words),
                }
                for r in self.rows
            ],
            "hamming": [
                {"pair": f"{a}-{b}", "distance": d} for a, b, d in self.hamming_pairs
            ],
            "min_distance": self.min_distance,
            "max_distance": self.max_distance,
        }

    def to_csv_text(self) -> str:
        rows = [[r.label, r.message, r.digest.to_hex()] for r in self.rows]
        return _csv_lines(["label", "message", "digest_hex"], rows)


_SENSITIVITY_EDITS = (
    ("m2", PerturbKind.FLIP_ONE_TO_ZERO),
    ("m3", PerturbKind.FLIP_ZERO_TO_ONE),
    ("m4", PerturbKind.INSERT_BIT),
    ("m5", PerturbKind.DELETE_BIT),
)


def sensitivity_suite(
    message: BitsLike, params: HashParams | None = None, seed: int = 0
) -> SensitivityReport:
    """Digest the base message and its four single-edit variants.

    Variants: one 1-bit cleared, one 0-bit set, one random bit inserted, one
    bit deleted — each edit applied to the *base* message at a seeded random
    position.
    """
    params = params if params is not None else HashParams()
    base = as_bit_array(message)
    rng = XorShift64Star(seed)
    variants: list[tuple[str, np.ndarray]] = [("m1", base)]
    for label, kind in _SENSITIVITY_EDITS:
        variants.append((label, perturb(base, kind, rng)))
    rows = tuple(
        SensitivityRow(label=label, message=bits_to_text(bits), digest=digest(bits, params))
        for label, bits in variants
    )
    pairs = []
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            pairs.append((rows[i].label, rows[j].label, hamming(rows[i].digest, rows[j].digest)))
    return SensitivityReport(
        seed=seed, params=params, rows=rows, hamming_pairs=tuple(pairs)
    )


def birthday_bound(bit_length: int) -> str:
    """Exact 2^(L/2) as a decimal string: trials for even odds of a collision."""
    if bit_length < 2 or bit_length % 2:
        raise ValueError(f"digest bit length must be even and >= 2, got {bit_length}")
    return str(1 << (bit_length // 2))
