"""Message-controlled coined quantum walk on the HN4 network.

The walker carries a 4-dimensional coin; one step applies a coin matrix to
every vertex's coin block and then one of two shift permutations.  Message
bits select which coin/shift pair is applied at each step, so a message *is*
an evolution schedule:

* single-bit mode: bit ``b`` applies ``U_b = S_b (C_b ⊗ I)``, bits taken
  left-to-right as written;
* two-bit mode: chars are consumed in pairs ``(x, y)`` from the left and
  apply ``U_yx = S_y (C_yx ⊗ I)`` — for '110100' the applied sequence is
  U_11, U_10, U_00 in time order.  Odd-length messages are left-padded with
  a single 0.

Shift ``S_0`` is the flip-flop variant (coin reverses along the traversed
edge), ``S_1`` the moving variant (coin kept).  States are flat complex128
vectors of length ``4*N_v`` indexed ``coin*N_v + vertex``.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import _kernels
from .bits import BitsLike, as_bit_array
from .params import CoinSpec, ControlMode, HashParams
from .topology import Topology, build_topology


def grover_coin(spec: CoinSpec, norm: str = "unit") -> np.ndarray:
    """Reflection 2ψψᵀ − I about ψ = (1, 1, √l, √l̃), normalized.

    With ``norm='unit'`` (the default and the only unitary choice) ψ is
    divided by √(2 + l + l̃).  ``norm='literal'`` divides by (2 + l + l̃)
    instead; the resulting matrix is *not* orthogonal and exists purely so
    digest-compatibility experiments can probe that convention.
    """
    psi = np.array([1.0, 1.0, math.sqrt(spec.l), math.sqrt(spec.lt)])
    total = 2.0 + spec.l + spec.lt
    if norm == "unit":
        psi /= math.sqrt(total)
    elif norm == "literal":
        psi /= total
    else:
        raise ValueError(f"norm must be 'unit' or 'literal', got {norm!r}")
    return 2.0 * np.outer(psi, psi) - np.eye(4)


def initial_state(topology: Topology) -> np.ndarray:
    """Equal-amplitude coin state at vertex label 0: amplitude 1/2 on each coin."""
    state = np.zeros(4 * topology.n_vertices, dtype=np.complex128)
    state[:: topology.n_vertices] = 0.5
    return state


def vertex_probabilities(state: np.ndarray) -> np.ndarray:
    """Per-vertex marginal P(v) = Σ_c |amplitude(c, v)|²."""
    a = np.asarray(state).reshape(4, -1)
    mag = a.real * a.real + a.imag * a.imag
    return ((mag[0] + mag[1]) + mag[2]) + mag[3]


class WalkEngine:
    """Topology, prebuilt coin matrices and step kernel for one parameter set."""

    def __init__(self, params: HashParams | None = None):
        self.params = params if params is not None else HashParams()
        self.topology = build_topology(self.params.n)
        self.coins = np.ascontiguousarray(
            np.stack([grover_coin(s, self.params.coin_norm) for s in self.params.coin_table()])
        )
        self.coins.flags.writeable = False

    def initial_state(self) -> np.ndarray:
        return initial_state(self.topology)

    def schedule(self, message: BitsLike) -> tuple[np.ndarray, np.ndarray]:
        """Translate a message into per-step (coin index, shift index) arrays."""
        bits = as_bit_array(message)
        if bits.size == 0:
            raise ValueError("message must contain at least one bit")
        if self.params.mode is ControlMode.SINGLE:
            idx = bits.astype(np.int64)
            return idx, idx
        if bits.size % 2:
            bits = np.concatenate([np.zeros(1, dtype=np.uint8), bits])
        x = bits[0::2].astype(np.int64)
        y = bits[1::2].astype(np.int64)
        return (y << 1) | x, y

    def run(self, message: BitsLike, state: np.ndarray | None = None) -> np.ndarray:
        """Evolve `state` (default: the canonical initial state) under `message`."""
        coin_idx, shift_idx = self.schedule(message)
        if state is None:
            state = self.initial_state()
        elif len(state) != 4 * self.topology.n_vertices:
            raise ValueError(
                f"state length {len(state)} does not match 4*N_v = {4 * self.topology.n_vertices}"
            )
        return _kernels.run_schedule(state, self.coins, coin_idx, shift_idx, self.topology.gathers)

    def step(self, state: np.ndarray, bit: int) -> np.ndarray:
        """Apply the single-bit operator U_bit once."""
        if bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {bit!r}")
        # In two-bit mode the table holds (C_00, C_01, C_10, C_11); bit b
        # maps onto the pure pair bb.
        coin = bit if self.params.mode is ControlMode.SINGLE else 3 * bit
        idx = np.array([coin], dtype=np.int64)
        sidx = np.array([bit], dtype=np.int64)
        return _kernels.run_schedule(state, self.coins, idx, sidx, self.topology.gathers)

    def probabilities(self, message: BitsLike) -> np.ndarray:
        return vertex_probabilities(self.run(message))


@lru_cache(maxsize=64)
def get_engine(params: HashParams) -> WalkEngine:
    """Shared engine per parameter set (topology + coins are immutable)."""
    return WalkEngine(params)


def evolve(message: BitsLike, params: HashParams | None = None) -> np.ndarray:
    """Run the full walk for `message` from the canonical initial state."""
    return get_engine(params if params is not None else HashParams()).run(message)


def step(state: np.ndarray, bit: int, params: HashParams | None = None) -> np.ndarray:
    """One application of U_bit to an explicit state."""
    return get_engine(params if params is not None else HashParams()).step(state, bit)


def cycle_walk_baseline(n: int, t: int, coin: str = "grover") -> np.ndarray:
    """Plain 2-coin walk on the 2**n cycle: the reference the HN4 walk is
    measured against.

    Starts from (|0⟩ + i|1⟩)/√2 at vertex 0 with a flip-flop shift.  Its
    distribution obeys the parity rule P(x) = 0 whenever x + t is odd, which
    the HN4 walk (self-loops break parity) does not.  ``coin`` picks the
    2-dim Grover coin (the balanced reflection, default) or 'hadamard'.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    if coin == "grover":
        c = np.array([[0.0, 1.0], [1.0, 0.0]])
    elif coin == "hadamard":
        r = 1.0 / math.sqrt(2.0)
        c = np.array([[r, r], [r, -r]])
    else:
        raise ValueError(f"coin must be 'grover' or 'hadamard', got {coin!r}")
    size = 1 << n
    amps = np.zeros((2, size), dtype=np.complex128)
    amps[0, 0] = 1.0 / math.sqrt(2.0)
    amps[1, 0] = 1j / math.sqrt(2.0)
    for _ in range(t):
        up = c[0, 0] * amps[0] + c[0, 1] * amps[1]
        down = c[1, 0] * amps[0] + c[1, 1] * amps[1]
        nxt = np.empty_like(amps)
        nxt[1] = np.roll(up, 1)  # coin 0 walks +1 and reverses
        nxt[0] = np.roll(down, -1)  # coin 1 walks -1 and reverses
        amps = nxt
    mag = amps.real * amps.real + amps.imag * amps.imag
    return mag[0] + mag[1]
