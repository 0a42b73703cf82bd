"""Hadamard matrix construction and bit-packed verification.

A matrix is stored as one Python int per row, bit j set <=> entry (i, j) is
-1, bit clear <=> +1.  The defining identity H H^T = nI reduces per row pair
to popcount(row_i XOR row_j) == n/2, which the selected kernel (compiled or
pure Python) checks over 64-bit words.

Constructors only ever return verified matrices; an unverified candidate
exists only as a plain (n, rows) pair, e.g. straight from a file.
"""

import os
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, ResourceCapError, VerificationError
from .kernels import first_violation

DEFAULT_MAX_ORDER = 16384
SYLVESTER_MAX_K_DEFAULT = 14
PALEY_Q_CAP_DEFAULT = 4099


def max_order() -> int:
    """Global order cap; COINMARD_MAX_ORDER overrides the default."""
    return int(os.environ.get("COINMARD_MAX_ORDER", DEFAULT_MAX_ORDER))


def pack_rows(n: int, rows: Sequence[int]) -> np.ndarray:
    """Pack row bitmasks into a (len(rows), ceil(n/64)) uint64 array."""
    words = max(1, (n + 63) // 64)
    buf = b"".join(r.to_bytes(words * 8, "little") for r in rows)
    return np.frombuffer(buf, dtype=np.uint64).reshape(len(rows), words)


def find_violation(n: int, rows: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First non-orthogonal row pair (i, j) of a square +-1 candidate, or None."""
    if len(rows) != n:
        raise DomainError(f"candidate is not square: {len(rows)} rows for order {n}")
    for idx, r in enumerate(rows):
        if r < 0 or r >> n:
            raise DomainError(f"row {idx} has bits outside the order-{n} range")
    return first_violation(pack_rows(n, rows), n)


def is_hadamard(n: int, rows: Sequence[int]) -> bool:
    return find_violation(n, rows) is None


def order_admissible(n: int) -> bool:
    """Necessary condition on the order: 1, 2, or a multiple of 4."""
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    return n in (1, 2) or n % 4 == 0


@dataclass(frozen=True)
class HadamardMatrix:
    """A verified Hadamard matrix; construction re-checks H H^T = nI."""

    n: int
    rows: Tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if not order_admissible(self.n):
            raise VerificationError(f"order {self.n} is not admissible")
        pair = find_violation(self.n, self.rows)
        if pair is not None:
            raise VerificationError(f"rows {pair} are not orthogonal")

    def entry(self, i: int, j: int) -> int:
        return -1 if (self.rows[i] >> j) & 1 else 1


def sylvester(k: int, max_k: Optional[int] = None) -> HadamardMatrix:
    """Order 2^k by repeated [[H, H], [H, -H]] doubling from [[+1]]."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    cap = SYLVESTER_MAX_K_DEFAULT if max_k is None else max_k
    if k > cap or 2**k > max_order():
        raise ResourceCapError(f"sylvester order 2^{k} exceeds cap")
    rows = [0]
    m = 1
    for _ in range(k):
        mask = (1 << m) - 1
        rows = [r | (r << m) for r in rows] + [r | ((r ^ mask) << m) for r in rows]
        m *= 2
    return HadamardMatrix(m, tuple(rows))


def kronecker(a: HadamardMatrix, b: HadamardMatrix) -> HadamardMatrix:
    """Entry-wise sign product: order n_a * n_b, sign bits combine by XOR."""
    n = a.n * b.n
    if n > max_order():
        raise ResourceCapError(f"kronecker order {n} exceeds cap {max_order()}")
    mask_b = (1 << b.n) - 1
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            comp = rb ^ mask_b
            row = 0
            for j in range(a.n):
                blk = comp if (ra >> j) & 1 else rb
                row |= blk << (j * b.n)
            rows.append(row)
    return HadamardMatrix(n, tuple(rows))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    i = 3
    while i * i <= q:
        if q % i == 0:
            return False
        i += 2
    return True


def paley_i(q: int, q_cap: int = PALEY_Q_CAP_DEFAULT) -> HadamardMatrix:
    """Order q+1 from the quadratic-residue character of GF(q), q = 3 mod 4.

    Convention: first row all +1; first column -1 below the (0,0) entry,
    which is +1; core (i, j >= 1) is +1 on the diagonal and chi(i - j)
    off it.  (This is I added to the bordered skew character matrix.)
    """
    if not _is_prime(q) or q % 4 != 3:
        raise DomainError(f"paley type I needs a prime q = 3 mod 4, got {q}")
    if q > q_cap or q + 1 > max_order():
        raise ResourceCapError(f"paley order {q + 1} exceeds cap")
    residues = {z * z % q for z in range(1, q)}
    n = q + 1
    rows = [0]  # first row all +1
    for i in range(q):
        row = 1  # first column entry -1
        for j in range(q):
            if i != j and (i - j) % q not in residues:
                row |= 1 << (j + 1)
        rows.append(row)
    return HadamardMatrix(n, tuple(rows))


def target_order(cert) -> int:
    """Order 2^(t+1) * v that the certificate's relation accounts for.

    Accounting only: the downstream construction that realizes this order is
    out of scope, so no matrix is produced.  The order is always admissible
    since t >= 1.
    """
    order = 2 ** (cert.t + 1) * cert.v
    assert order_admissible(order)
    return order
