"""Exponent certificates a(v+1) + b(v-3) = 2^t and the bound audit.

Two exponents are tracked for each odd v >= 9:

* the procedural t: take g = gcd(v+1, v-3) = 2^d, reduce the coins by g,
  pick the smallest 2^k above the two-coin representability threshold, and
  scale back, giving t = k + d;
* the true minimal t_min, found by scanning exponents from 0 upward with the
  exact representability test.

Both are compared against two closed-form caps on t ("claimed" and
"corrected", the latter one larger), evaluated exactly via bit lengths so
power-of-two boundary cases are never decided in floating point.
"""

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .errors import DomainError, ResourceCapError
from .frobenius import CoinPair, is_representable, represent

T_CAP_DEFAULT = 64


def _check_v(v: int):
    if v % 2 == 0 or v < 9:
        raise DomainError(f"v must be odd and >= 9, got {v}")


def gcd_class(v: int):
    """(g, d) with g = gcd(v+1, v-3) = 2^d; g is 2 for v=1 mod 4, else 4."""
    _check_v(v)
    g = gcd(v + 1, v - 3)
    assert g in (2, 4), f"gcd(v+1, v-3) = {g} impossible for odd v"
    return g, g.bit_length() - 1


def sylvester_threshold(v: int) -> int:
    """((v+1)/g - 1) * ((v-3)/g - 1): every larger integer is representable
    by the reduced coin pair."""
    g, _ = gcd_class(v)
    return ((v + 1) // g - 1) * ((v - 3) // g - 1)


@dataclass(frozen=True)
class ExponentCertificate:
    """Full record of the procedural construction for one odd v."""

    v: int
    g: int
    d: int
    N: int
    k: int
    t: int
    a: int
    b: int

    def identity(self) -> str:
        lhs = self.a * (self.v + 1) + self.b * (self.v - 3)
        return f"{self.a}*{self.v + 1} + {self.b}*{self.v - 3} = {lhs} = 2^{self.t}"

    def check(self) -> bool:
        return self.a * (self.v + 1) + self.b * (self.v - 3) == 2**self.t


@dataclass(frozen=True)
class MinimalExponentWitness:
    """Smallest t with a nonnegative solution of a(v+1) + b(v-3) = 2^t."""

    v: int
    t_min: int
    a: int
    b: int


def corollary7_certificate(v: int) -> ExponentCertificate:
    """Run the procedural construction for v and return its verified record.

    k is the least exponent with 2^k > N, computed as N.bit_length(); the
    (a, b) pair is the canonical minimal-a representation of 2^k by the
    reduced coins, scaled back by g = 2^d to give a(v+1) + b(v-3) = 2^(k+d).
    """
    g, d = gcd_class(v)
    n = sylvester_threshold(v)
    k = n.bit_length()
    pair = CoinPair((v + 1) // g, (v - 3) // g)
    rep = represent(pair, 2**k)
    # 2^k > threshold, so a solution must exist; absence means a solver bug
    assert rep is not None, f"no representation of 2^{k} by {pair} for v={v}"
    cert = ExponentCertificate(v=v, g=g, d=d, N=n, k=k, t=k + d, a=rep.a, b=rep.b)
    assert cert.check()
    return cert


def minimal_exponent(v: int, t_cap: int = T_CAP_DEFAULT) -> MinimalExponentWitness:
    """Ground-truth minimal exponent, by ascending scan of t = 0, 1, ...

    Uses the polynomial-time representability test at each step, so the scan
    itself is cheap; minimality is guaranteed by the scan order.
    """
    _check_v(v)
    if t_cap < 1:
        raise DomainError(f"t_cap must be >= 1, got {t_cap}")
    pair = CoinPair(v + 1, v - 3)
    for t in range(t_cap + 1):
        if is_representable(pair, 2**t):
            rep = represent(pair, 2**t)
            return MinimalExponentWitness(v=v, t_min=t, a=rep.a, b=rep.b)
    raise ResourceCapError(f"cap exceeded: no power of 2 up to 2^{t_cap} representable for v={v}")


class BoundModel(enum.Enum):
    CLAIMED = "claimed"
    CORRECTED = "corrected"


def bound_value(model: BoundModel, q: int) -> int:
    """floor(2*log2(q-3)) for the claimed model, one more for the corrected.

    Evaluated exactly as bit_length((q-3)^2) - 1; no floating point, so
    values where q-3 is a power of two are exact.
    """
    if q <= 4:
        raise DomainError(f"bound requires q > 4, got {q}")
    claimed = ((q - 3) ** 2).bit_length() - 1
    return claimed if model is BoundModel.CLAIMED else claimed + 1


def paper_k(v: int) -> int:
    """The looser closed-form choice of k: floor(2*log2(v-3)) - 1."""
    _check_v(v)
    return bound_value(BoundModel.CLAIMED, v) - 1


def multiplicativity_check(p: int, q: int, model: BoundModel) -> bool:
    """True iff bound(p) + bound(q) <= bound(pq), exact integer evaluation.

    Non-strict: bound preservation under multiplication needs the sum of the
    factor bounds to not exceed the product bound.  (A strict reading fails
    whenever the floors land exactly, e.g. p=q=19 gives 8+8 = 16 = bound(361);
    the non-strict form is provable for the claimed model.)  For the
    corrected model, failures are expected findings, not errors.
    """
    return bound_value(model, p) + bound_value(model, q) <= bound_value(model, p * q)


@dataclass(frozen=True)
class AuditRow:
    """Per-v comparison of the procedural exponent against both bounds."""

    v: int
    residue_class: int
    g: int
    d: int
    N: int
    k: int
    t: int
    order_exponent: int
    t_min: int
    bound_claimed: int
    bound_corrected: int
    k_paper: int
    t_paper: int
    violates_claimed: bool


def audit(v: int, t_cap: int = T_CAP_DEFAULT) -> AuditRow:
    """Assemble the full audit row for one v."""
    cert = corollary7_certificate(v)
    witness = minimal_exponent(v, t_cap)
    claimed = bound_value(BoundModel.CLAIMED, v)
    kp = paper_k(v)
    return AuditRow(
        v=v,
        residue_class=v % 4,
        g=cert.g,
        d=cert.d,
        N=cert.N,
        k=cert.k,
        t=cert.t,
        order_exponent=cert.t + 1,
        t_min=witness.t_min,
        bound_claimed=claimed,
        bound_corrected=bound_value(BoundModel.CORRECTED, v),
        k_paper=kp,
        t_paper=kp + cert.d,
        # the constructed order exponent t+1 overshoots the cap exactly when
        # t >= bound; equality is the interesting case (v=17)
        violates_claimed=cert.t + 1 > claimed,
    )


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def audit_range(
    v_start: int,
    v_end: int,
    primes_only: bool = False,
    residue_filter: Optional[int] = None,
    t_cap: int = T_CAP_DEFAULT,
) -> Iterator[AuditRow]:
    """Audit all odd v in [v_start, v_end], ascending.

    With primes_only, v runs over primes, restricted to v = 1 mod 4 unless a
    residue_filter overrides it.  residue_filter in {1, 3} also applies on
    its own to plain odd v.
    """
    if not 9 <= v_start <= v_end:
        raise DomainError(f"need 9 <= start <= end, got [{v_start}, {v_end}]")
    if residue_filter not in (None, 1, 3):
        raise DomainError(f"residue filter must be 1 or 3, got {residue_filter}")
    residue = residue_filter
    if primes_only and residue is None:
        residue = 1
    v = v_start if v_start % 2 == 1 else v_start + 1
    while v <= v_end:
        if (residue is None or v % 4 == residue) and (not primes_only or is_prime(v)):
            yield audit(v, t_cap)
        v += 2


@dataclass(frozen=True)
class AuditSummary:
    rows: int
    violations: int
    max_gap: int  # largest t - t_min over the range


def summarize(rows) -> AuditSummary:
    count = violations = 0
    max_gap = 0
    for row in rows:
        count += 1
        if row.violates_claimed:
            violations += 1
        max_gap = max(max_gap, row.t - row.t_min)
    return AuditSummary(rows=count, violations=violations, max_gap=max_gap)
