"""Pure-Python fallback for the packed Gram check.

Same contract as the compiled kernel in _gram.pyx.  Uses numpy's vectorized
bitwise_count when available (numpy >= 2.0), otherwise Python int popcounts.
"""

import numpy as np


def _first_violation_ints(rows, n):
    half = n >> 1
    masks = [int.from_bytes(r.tobytes(), "little") for r in rows]
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if (mi ^ masks[j]).bit_count() != half:
                return (i, j)
    return None


def first_violation(rows, n):
    """First row pair (i, j), i < j, with nonzero dot product, or None."""
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    if n & 1:
        return (0, 1) if rows.shape[0] > 1 else None
    if not hasattr(np, "bitwise_count"):
        return _first_violation_ints(rows, n)
    half = n >> 1
    for i in range(rows.shape[0] - 1):
        pops = np.bitwise_count(rows[i] ^ rows[i + 1 :]).sum(axis=1, dtype=np.int64)
        bad = np.nonzero(pops != half)[0]
        if bad.size:
            return (i, i + 1 + int(bad[0]))
    return None
