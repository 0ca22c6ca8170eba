"""Independent reference implementations the tests compare the package against.

Everything here is deliberately built by a *different* route than the
package: levels via trial division instead of bit tricks, shifts as dense
permutation matrices assembled from the edge relations, coins in 50-digit
arithmetic, evolution as explicit matrix products.  Slow and obvious on
purpose.
"""

from __future__ import annotations

import numpy as np
from mpmath import mp


def enumerate_levels(n: int) -> dict[int, tuple[int, int]]:
    """Map every vertex value 1..2**n to its (level, offset) by trial division."""
    mapping = {}
    for value in range(1, 2**n + 1):
        i = 0
        v = value
        while v % 2 == 0:
            v //= 2
            i += 1
        mapping[value] = (i, (v - 1) // 2)
    return mapping


def level_sizes(n: int) -> dict[int, int]:
    sizes: dict[int, int] = {}
    for _, (i, _) in enumerate_levels(n).items():
        sizes[i] = sizes.get(i, 0) + 1
    return sizes


def dense_shifts(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Flip-flop and moving shift as dense permutation matrices.

    Composite index convention matches the package: coin*N + label, with
    label = value mod 2**n.  Assembled edge by edge from the ring and the
    within-level chord relation, self-loops on the two top levels.
    """
    size = 2**n
    levels = enumerate_levels(n)
    counts = level_sizes(n)
    flip = np.zeros((4 * size, 4 * size))
    move = np.zeros((4 * size, 4 * size))

    def lab(value: int) -> int:
        return value % size

    for value, (i, j) in levels.items():
        v = lab(value)
        # ring ports 0 (+1) and 1 (-1)
        flip[1 * size + (v + 1) % size, 0 * size + v] = 1
        flip[0 * size + (v - 1) % size, 1 * size + v] = 1
        move[0 * size + (v + 1) % size, 0 * size + v] = 1
        move[1 * size + (v - 1) % size, 1 * size + v] = 1
        # chord ports 2 (offset +1) and 3 (offset -1)
        if i >= n - 1:
            for c in (2, 3):
                flip[c * size + v, c * size + v] = 1
                move[c * size + v, c * size + v] = 1
        else:
            m = counts[i]
            nxt = lab(2**i * (2 * ((j + 1) % m) + 1))
            prv = lab(2**i * (2 * ((j - 1) % m) + 1))
            flip[3 * size + nxt, 2 * size + v] = 1
            flip[2 * size + prv, 3 * size + v] = 1
            move[2 * size + nxt, 2 * size + v] = 1
            move[3 * size + prv, 3 * size + v] = 1
    return flip, move


def mp_grover_coin(l: float, lt: float, dps: int = 50) -> np.ndarray:
    """4x4 reflection 2ψψᵀ − I computed with 50-digit floats."""
    with mp.workdps(dps):
        psi = [mp.mpf(1), mp.mpf(1), mp.sqrt(mp.mpf(l)), mp.sqrt(mp.mpf(lt))]
        norm = mp.sqrt(2 + mp.mpf(l) + mp.mpf(lt))
        psi = [x / norm for x in psi]
        out = np.empty((4, 4))
        for a in range(4):
            for b in range(4):
                out[a, b] = float(2 * psi[a] * psi[b] - (1 if a == b else 0))
    return out


def dense_step_matrices(n: int, coins: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    """Dense one-step operators S_b (C ⊗ I) keyed like `coins` ('0', '1', '00'...).

    Single-char keys use the bit as the shift index; two-char keys 'yx' use
    y (the first char) as the shift index.
    """
    size = 2**n
    flip, move = dense_shifts(n)
    shifts = {0: flip, 1: move}
    out = {}
    for key, coin in coins.items():
        s = int(key[0])
        out[key] = shifts[s] @ np.kron(coin, np.eye(size))
    return out


def dense_initial_state(n: int) -> np.ndarray:
    size = 2**n
    state = np.zeros(4 * size, dtype=np.complex128)
    for c in range(4):
        state[c * size + 0] = 0.5
    return state


def dense_evolve(matrices: list[np.ndarray], state: np.ndarray) -> np.ndarray:
    """Apply the given step matrices in list order (time order)."""
    out = np.array(state, dtype=np.complex128)
    for m in matrices:
        out = m @ out
    return out
