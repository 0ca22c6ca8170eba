# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled walk kernel.

Same contract and, crucially, the same floating-point operation order as
``_purepy.run_schedule``; built with ``-ffp-contract=off`` so no
multiply-adds get fused and the two backends stay bit-identical.
"""

import numpy as np

from libc.stdint cimport int64_t


cdef void _run(double[::1] cur, double[::1] nxt,
               const double[:, :, ::1] coins,
               const int64_t[::1] coin_idx,
               const int64_t[::1] shift_idx,
               const int64_t[:, ::1] gathers) noexcept nogil:
    cdef Py_ssize_t steps = coin_idx.shape[0]
    cdef Py_ssize_t size4 = cur.shape[0] // 2
    cdef Py_ssize_t n = size4 // 4
    cdef Py_ssize_t t, v, co, i, g, ci, si
    cdef Py_ssize_t i0, i1, i2, i3
    cdef double re0, im0, re1, im1, re2, im2, re3, im3
    cdef double c0, c1, c2, c3
    for t in range(steps):
        ci = coin_idx[t]
        si = shift_idx[t]
        for v in range(n):
            i0 = 2 * v
            i1 = 2 * (n + v)
            i2 = 2 * (2 * n + v)
            i3 = 2 * (3 * n + v)
            re0 = cur[i0]; im0 = cur[i0 + 1]
            re1 = cur[i1]; im1 = cur[i1 + 1]
            re2 = cur[i2]; im2 = cur[i2 + 1]
            re3 = cur[i3]; im3 = cur[i3 + 1]
            for co in range(4):
                c0 = coins[ci, co, 0]
                c1 = coins[ci, co, 1]
                c2 = coins[ci, co, 2]
                c3 = coins[ci, co, 3]
                i = 2 * (co * n + v)
                nxt[i] = ((c0 * re0 + c1 * re1) + c2 * re2) + c3 * re3
                nxt[i + 1] = ((c0 * im0 + c1 * im1) + c2 * im2) + c3 * im3
        for i in range(size4):
            g = gathers[si, i]
            cur[2 * i] = nxt[2 * g]
            cur[2 * i + 1] = nxt[2 * g + 1]


def run_schedule(state, coins, coin_idx, shift_idx, gathers):
    cur = np.array(state, dtype=np.complex128)
    if cur.ndim != 1 or cur.shape[0] % 4:
        raise ValueError("state must be a flat vector of length 4*N")
    nxt = np.empty_like(cur)
    cdef double[::1] cur_f = cur.view(np.float64)
    cdef double[::1] nxt_f = nxt.view(np.float64)
    cdef const double[:, :, ::1] coins_f = np.ascontiguousarray(coins, dtype=np.float64)
    cdef const int64_t[::1] ci = np.ascontiguousarray(coin_idx, dtype=np.int64)
    cdef const int64_t[::1] si = np.ascontiguousarray(shift_idx, dtype=np.int64)
    cdef const int64_t[:, ::1] ga = np.ascontiguousarray(gathers, dtype=np.int64)
    if ci.shape[0] != si.shape[0]:
        raise ValueError("coin and shift schedules differ in length")
    if ga.shape[1] != cur.shape[0]:
        raise ValueError("gather maps do not match the state length")
    with nogil:
        _run(cur_f, nxt_f, coins_f, ci, si, ga)
    return cur
