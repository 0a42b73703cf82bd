"""Exact two-coin Frobenius solver.

Everything here is plain integer arithmetic on Python ints, so results are
exact at any size.  The canonical representation returned by represent() is
the one with minimal a (count of the larger coin); represent_oracle() is the
brute-force cross-check used by the test suite.
"""

from dataclasses import dataclass
from math import gcd

from .errors import AllRepresentableError, DomainError, NotCoprimeError, ResourceCapError

ORACLE_CAP_DEFAULT = 10**7


@dataclass(frozen=True)
class CoinPair:
    """An ordered coin pair x > y >= 1 with its gcd precomputed."""

    x: int
    y: int

    def __post_init__(self):
        if self.x <= self.y or self.y < 1:
            raise DomainError(f"coin pair requires x > y >= 1, got ({self.x}, {self.y})")

    @property
    def g(self) -> int:
        return gcd(self.x, self.y)

    @property
    def is_reduced(self) -> bool:
        return self.g == 1

    def reduced(self) -> "CoinPair":
        g = self.g
        return self if g == 1 else CoinPair(self.x // g, self.y // g)


@dataclass(frozen=True)
class Representation:
    """Nonnegative (a, b) with a*x + b*y == N for the pair/target it was built for."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError(f"representation must be nonnegative, got ({self.a}, {self.b})")

    def value(self, pair: CoinPair) -> int:
        return self.a * pair.x + self.b * pair.y


def frobenius_number(pair: CoinPair) -> int:
    """Largest integer not representable as ax + by, i.e. xy - x - y.

    Only defined for coprime pairs with y >= 2; y = 1 spans all of N and is
    signalled with AllRepresentableError rather than a sentinel number.
    """
    if pair.y == 1:
        raise AllRepresentableError("y = 1: all integers representable, no Frobenius number")
    if not pair.is_reduced:
        raise NotCoprimeError(f"not coprime: gcd({pair.x}, {pair.y}) = {pair.g}")
    return pair.x * pair.y - pair.x - pair.y


def _minimal_a(x: int, y: int, n: int):
    """Least a >= 0 with a*x <= n and y | (n - a*x), for coprime x, y. None if absent."""
    if y == 1:
        return 0
    a = n * pow(x, -1, y) % y
    return a if a * x <= n else None


def is_representable(pair: CoinPair, n: int) -> bool:
    """True iff nonnegative a, b exist with ax + by = n.

    Non-coprime pairs are reduced internally; n must then be divisible by g.
    """
    if n < 0:
        raise DomainError(f"target must be nonnegative, got {n}")
    g = pair.g
    if n % g != 0:
        return False
    red = pair.reduced()
    return _minimal_a(red.x, red.y, n // g) is not None


def represent(pair: CoinPair, n: int):
    """Canonical representation of n: the nonnegative solution with minimal a.

    Runs in time polynomial in the bit length (modular inverse, no
    enumeration).  Returns None when n is not representable.
    """
    if n < 0:
        raise DomainError(f"target must be nonnegative, got {n}")
    g = pair.g
    if n % g != 0:
        return None
    red = pair.reduced()
    m = n // g
    a = _minimal_a(red.x, red.y, m)
    if a is None:
        return None
    rep = Representation(a, (m - a * red.x) // red.y)
    assert rep.value(pair) == n
    return rep


def represent_oracle(pair: CoinPair, n: int, cap: int = ORACLE_CAP_DEFAULT):
    """All nonnegative solutions of ax + by = n, by enumeration of a.

    Deliberately independent of represent(): no modular arithmetic, just a
    scan of a = 0..n/x.  Bounded by cap to keep the enumeration tractable.
    """
    if n < 0:
        raise DomainError(f"target must be nonnegative, got {n}")
    if n > cap:
        raise ResourceCapError(f"oracle cap: target {n} exceeds cap {cap}")
    out = []
    for a in range(n // pair.x + 1):
        rest = n - a * pair.x
        if rest % pair.y == 0:
            out.append(Representation(a, rest // pair.y))
    return out
