"""Pure-numpy walk kernel.

Reference implementation of the step kernel contract shared with the
compiled extension: both must produce bit-identical state vectors, so the
floating-point operation order here is fixed and mirrored exactly in the
extension (see ``_walkcore.pyx``).

Contract of :func:`run_schedule`:

* ``state``: complex128 vector of length ``4*N``, ordered coin-major
  (index ``c*N + v``); never modified.
* ``coins``: ``(M, 4, 4)`` float64 stack of coin matrices.
* ``coin_idx`` / ``shift_idx``: per-step int64 indices into ``coins`` and
  ``gathers``.
* ``gathers``: ``(2, 4*N)`` int64 source maps — entry ``i`` of the shifted
  vector is entry ``gathers[s, i]`` of the coined vector.
"""

from __future__ import annotations

import numpy as np


def run_schedule(
    state: np.ndarray,
    coins: np.ndarray,
    coin_idx: np.ndarray,
    shift_idx: np.ndarray,
    gathers: np.ndarray,
) -> np.ndarray:
    out = np.array(state, dtype=np.complex128)
    for ci, si in zip(coin_idx, shift_idx):
        c = coins[ci]
        # Real/imaginary parts stay interleaved in a float64 view so the coin
        # multiply is plain real arithmetic, exactly as in the extension.
        a = out.reshape(4, -1).view(np.float64)
        coined = (
            (c[:, 0, None] * a[0] + c[:, 1, None] * a[1]) + c[:, 2, None] * a[2]
        ) + c[:, 3, None] * a[3]
        out = coined.view(np.complex128).reshape(-1)[gathers[si]]
    return out
