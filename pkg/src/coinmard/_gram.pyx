# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled XOR+popcount Gram check over bit-packed rows.

Rows are packed into 64-bit words, set bit = -1 entry.  Two +-1 rows are
orthogonal iff popcount(r_i XOR r_j) == n/2, and a row dots with itself to n
automatically, so only off-diagonal pairs are scanned.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define POPCNT64(x) __builtin_popcountll(x)
    #else
    static int POPCNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int POPCNT64(uint64_t x) nogil


def first_violation(const uint64_t[:, ::1] rows, int n):
    """First row pair (i, j), i < j, with nonzero dot product, or None.

    Short-circuits on the first failure.
    """
    cdef int nrows = rows.shape[0]
    cdef int words = rows.shape[1]
    cdef int i, j, w
    cdef int half = n >> 1
    cdef int pop
    cdef int bi = -1, bj = -1
    if n & 1:
        # odd n > 1 can never have orthogonal +-1 rows
        if nrows > 1:
            return (0, 1)
        return None
    with nogil:
        for i in range(nrows):
            for j in range(i + 1, nrows):
                pop = 0
                for w in range(words):
                    pop += POPCNT64(rows[i, w] ^ rows[j, w])
                if pop != half:
                    bi = i
                    bj = j
                    break
            if bi >= 0:
                break
    if bi >= 0:
        return (bi, bj)
    return None
