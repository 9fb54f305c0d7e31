# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled marginal-contribution kernels.

Same contract as ``_pykernels`` but on ``int64`` tables.  The caller must
check that no bucket can overflow 64 bits before dispatching here.
"""

import numpy as np

from libc.stdint cimport int64_t, uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


def shapley_sums(table, int n):
    cdef const int64_t[:] v = np.ascontiguousarray(table, dtype=np.int64)
    out = np.zeros((n, n), dtype=np.int64)
    cdef int64_t[:, :] sums = out
    cdef uint64_t S, size = (<uint64_t>1) << n
    cdef uint64_t b
    cdef int64_t vS
    cdef int i, s
    with nogil:
        for S in range(size):
            vS = v[S]
            s = _popcount(S)
            for i in range(n):
                b = (<uint64_t>1) << i
                if not (S & b):
                    sums[i, s] += v[S | b] - vS
    return out


def configuration_sums(table, int n, blocks):
    cdef const int64_t[:] v = np.ascontiguousarray(table, dtype=np.int64)
    cdef uint64_t[:] bl = np.ascontiguousarray(blocks, dtype=np.uint64)
    cdef int m = bl.shape[0]
    cdef int width = 0
    cdef int q, r, i
    for q in range(m):
        width = max(width, _popcount(bl[q]))
    width += 1
    out = np.zeros((n, m, m, width), dtype=np.int64)
    cdef int64_t[:, :, :, :] sums = out
    cdef uint64_t all_blocks = ((<uint64_t>1) << m) - 1
    cdef uint64_t bit, own, others, rest, C, sub, A, T, Cbits
    cdef int c
    with nogil:
        for i in range(n):
            bit = (<uint64_t>1) << i
            own = 0
            for q in range(m):
                if bl[q] & bit:
                    own |= (<uint64_t>1) << q
            others = all_blocks & ~own
            for q in range(m):
                if not (bl[q] & bit):
                    continue
                rest = bl[q] & ~bit
                C = others
                while True:
                    A = 0
                    Cbits = C
                    r = 0
                    while Cbits:
                        if Cbits & 1:
                            A |= bl[r]
                        Cbits >>= 1
                        r += 1
                    c = _popcount(C)
                    sub = rest
                    while True:
                        T = A | sub
                        sums[i, q, c, _popcount(sub) + 1] += v[T | bit] - v[T]
                        if sub == 0:
                            break
                        sub = (sub - 1) & rest
                    if C == 0:
                        break
                    C = (C - 1) & others
    return out
