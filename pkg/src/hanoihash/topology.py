"""Degree-4 Hanoi network (HN4) construction.

The graph is a ring of ``N_v = 2**n`` vertices with extra chords.  Writing a
vertex value as ``x = 2**i * (2*j + 1)`` places it on level ``i`` with offset
``j``; chords connect consecutive offsets within a level.  The two top levels
(``i = n-1`` and ``i = n``) hold a single vertex each and carry self-loops on
their chord ports instead.

Vertex labels used everywhere else in the package are 0-based ring positions
``0 .. N_v-1``; label 0 stands for the vertex value ``2**n``, which makes the
mod-``N_v`` ring arithmetic uniform.

Each vertex has four ports, matching the four coin directions of the walk:

==== ==========================================
port destination
==== ==========================================
0    ring neighbour  v+1 (mod N_v)
1    ring neighbour  v-1 (mod N_v)
2    chord to offset j+1 within the level
3    chord to offset j-1 within the level
==== ==========================================

Offset arithmetic is modular within each level (``j+1`` wraps back to 0 past
the last offset); that wrap is what makes the two shift operators
permutations, hence unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def j_max(i: int, n: int) -> int:
    """Largest offset on level ``i`` of the n-level network."""
    if not 0 <= i <= n:
        raise ValueError(f"level must be in [0, {n}], got {i}")
    return ((1 << (n - i)) - 1) // 2


def decompose(value: int, n: int) -> tuple[int, int]:
    """Split a vertex value ``1 .. 2**n`` into its (level, offset) pair.

    The level is the 2-adic valuation of the value; ``2**n`` itself maps to
    ``(n, 0)``.
    """
    top = 1 << n
    if not 1 <= value <= top:
        raise ValueError(f"vertex value must be in [1, {top}], got {value}")
    i = (value & -value).bit_length() - 1
    return i, ((value >> i) - 1) // 2


def compose(i: int, j: int, n: int) -> int:
    """Inverse of :func:`decompose`: vertex value ``2**i * (2*j + 1)``."""
    if not 0 <= j <= j_max(i, n):
        raise ValueError(f"offset must be in [0, {j_max(i, n)}] on level {i}, got {j}")
    return (1 << i) * (2 * j + 1)


def value_to_label(value: int, n: int) -> int:
    """Map a vertex value ``1 .. 2**n`` onto its 0-based ring label."""
    return value % (1 << n)


def label_to_value(label: int, n: int) -> int:
    """Map a 0-based ring label onto its vertex value (label 0 -> ``2**n``)."""
    return label if label else 1 << n


@dataclass(frozen=True, eq=False)
class Topology:
    """Immutable HN4 wiring: port tables plus the two shift permutations.

    ``shift_flipflop`` and ``shift_moving`` map a composite coin-vertex index
    ``c*N_v + v`` to its image under one shift application.  The flip-flop
    variant reverses the coin along the traversed edge (0<->1 on the ring,
    2<->3 on the chords); the moving variant keeps it.  Self-loop vertices
    keep both chord coins in place under either shift.  ``gathers[b][i]``
    holds the *source* index feeding position ``i`` under shift ``b``
    (0 = flip-flop, 1 = moving), which is the layout the step kernels consume.
    """

    n: int
    n_vertices: int
    levels: np.ndarray
    offsets: np.ndarray
    ports: np.ndarray
    shift_flipflop: np.ndarray
    shift_moving: np.ndarray
    gathers: np.ndarray
    self_loop_labels: tuple[int, int]

    def chord_neighbors(self, label: int) -> tuple[int, int]:
        """Destinations of the two chord ports of ``label``."""
        return int(self.ports[2, label]), int(self.ports[3, label])


def _invert(perm: np.ndarray) -> np.ndarray:
    inv = np.empty_like(perm)
    inv[perm] = np.arange(perm.size, dtype=perm.dtype)
    return inv


def build_topology(n: int) -> Topology:
    """Construct the n-level HN4 network (``2**n`` vertices, n >= 2)."""
    if n < 2:
        raise ValueError(f"need n >= 2 levels, got {n}")
    size = 1 << n

    levels = np.empty(size, dtype=np.int64)
    offsets = np.empty(size, dtype=np.int64)
    for v in range(size):
        i, j = decompose(label_to_value(v, n), n)
        levels[v] = i
        offsets[v] = j

    # Only the two top levels may be singletons; anything else would need a
    # self-loop the construction does not define.
    for i in range(n - 1):
        if j_max(i, n) < 1:
            raise AssertionError(f"level {i} of n={n} degenerated to a single vertex")

    labels = np.arange(size, dtype=np.int64)
    ports = np.empty((4, size), dtype=np.int64)
    ports[0] = (labels + 1) % size
    ports[1] = (labels - 1) % size
    for v in range(size):
        i, j = int(levels[v]), int(offsets[v])
        if i >= n - 1:
            ports[2, v] = v
            ports[3, v] = v
        else:
            m = j_max(i, n) + 1
            ports[2, v] = value_to_label(compose(i, (j + 1) % m, n), n)
            ports[3, v] = value_to_label(compose(i, (j - 1) % m, n), n)

    flip = np.empty(4 * size, dtype=np.int64)
    move = np.empty(4 * size, dtype=np.int64)
    for v in range(size):
        loop = levels[v] >= n - 1
        flip[0 * size + v] = 1 * size + ports[0, v]
        flip[1 * size + v] = 0 * size + ports[1, v]
        flip[2 * size + v] = (2 if loop else 3) * size + ports[2, v]
        flip[3 * size + v] = (3 if loop else 2) * size + ports[3, v]
        move[0 * size + v] = 0 * size + ports[0, v]
        move[1 * size + v] = 1 * size + ports[1, v]
        move[2 * size + v] = 2 * size + ports[2, v]
        move[3 * size + v] = 3 * size + ports[3, v]

    for name, perm in (("flip-flop", flip), ("moving", move)):
        if not np.array_equal(np.sort(perm), np.arange(4 * size)):
            raise AssertionError(f"{name} shift is not a permutation")

    gathers = np.ascontiguousarray(np.stack([_invert(flip), _invert(move)]))

    arrays = (levels, offsets, ports, flip, move, gathers)
    for arr in arrays:
        arr.flags.writeable = False

    return Topology(
        n=n,
        n_vertices=size,
        levels=levels,
        offsets=offsets,
        ports=ports,
        shift_flipflop=flip,
        shift_moving=move,
        gathers=gathers,
        self_loop_labels=(1 << (n - 1), 0),
    )
