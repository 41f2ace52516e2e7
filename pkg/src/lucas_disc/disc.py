"""Discriminator D_k(n): least m with U_0..U_{n-1} pairwise distinct mod m."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import charsets
from .charsets import candidate_index, least_at_least, min_S, pow2_at_least
from .dioph import np_value
from .errors import CapExceeded, NotCovered, PreconditionViolated
from .numth import prime_set
from .seq import as_params

BRUTE_CAP = 1 << 16
SHARED_TABLE_MAX = 4096
CERTIFY_PRIME_LIMIT = 10**4
FIVE_THIRDS = Fraction(5, 3)

# bytes of residue bitmap allowed per vectorized chunk
_BITMAP_BUDGET = 1 << 26


@dataclass(frozen=True)
class DiscriminatorValue:
    n: int
    value: int
    method: str  # brute | closed_k1 | closed_k2 | structured


@dataclass(frozen=True)
class FkCertificate:
    k: int
    values: tuple[int, ...]
    scanned_up_to: int
    certified: bool
    certifying_prime: int | None = None
    threshold: int | None = None
    thresholds: dict[int, int] = field(default_factory=dict, compare=False)


def _distinct_mod(t: int, n: int, m: int) -> bool:
    seen = bytearray(m)
    a, b = 0, 1 % m
    for _ in range(n):
        if seen[a]:
            return False
        seen[a] = 1
        a, b = b, (t * b - a) % m
    return True


def disc_bruteforce(params, n: int, cap: int = BRUTE_CAP) -> DiscriminatorValue:
    params = as_params(params)
    if n < 1:
        raise PreconditionViolated("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the brute-force cap {cap}")
    if n <= SHARED_TABLE_MAX:
        # one vectorized sweep answers every small n for this k
        return DiscriminatorValue(n, _shared_table(params.k, pow2_at_least(max(n, 256)))[n], "brute")
    m = n  # m < n is ruled out by pigeonhole
    while not _distinct_mod(params.trace % m, n, m):
        m += 1
    return DiscriminatorValue(n, m, "brute")


@lru_cache(maxsize=64)
def _shared_table(k: int, n_max: int) -> tuple[int, ...]:
    return tuple(disc_bruteforce_table(k, n_max))


def incongruence_indices(params, m_hi: int, cap: int) -> np.ndarray:
    """min(iota_k(m), cap) for m = 0..m_hi (entry 0 unused).

    All moduli advance in lockstep through the recurrence; a modulus drops
    out at its first repeated residue.
    """
    params = as_params(params)
    out = np.zeros(m_hi + 1, dtype=np.int64)
    rows_per_chunk = max(1, _BITMAP_BUDGET // (m_hi + 1))
    for lo in range(1, m_hi + 1, rows_per_chunk):
        ms = np.arange(lo, min(lo + rows_per_chunk, m_hi + 1), dtype=np.int64)
        width = int(ms[-1])
        seen = np.zeros((len(ms), width), dtype=bool)
        # reduce in Python ints: k itself may not fit in int64
        t = np.fromiter((params.trace % int(m) for m in ms), dtype=np.int64, count=len(ms))
        a = np.zeros(len(ms), dtype=np.int64)
        b = 1 % ms
        iota = np.full(len(ms), cap, dtype=np.int64)
        alive = np.arange(len(ms))
        for i in range(cap):
            vals = a[alive]
            hit = seen[alive, vals]
            if hit.any():
                iota[alive[hit]] = i
                alive = alive[~hit]
                vals = vals[~hit]
                if not len(alive):
                    break
            seen[alive, vals] = True
            ba = b[alive]
            b[alive] = (t[alive] * ba - vals) % ms[alive]
            a[alive] = ba
        out[lo : lo + len(ms)] = iota
    return out


def disc_bruteforce_table(params, n_max: int, cap: int = BRUTE_CAP) -> list[int]:
    """[0, D(1), ..., D(n_max)] straight from the definition.

    D(n) is the least m with iota(m) >= n, so one sweep of incongruence
    indices over m <= 2^ceil(log2 n_max) settles every n at once.
    """
    params = as_params(params)
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds the brute-force cap {cap}")
    m_hi = pow2_at_least(n_max)
    while True:
        iota = incongruence_indices(params, m_hi, n_max)
        table = [0] * (n_max + 1)
        filled = 0
        for m in range(1, m_hi + 1):
            i = int(iota[m])
            if i > filled:
                table[filled + 1 : i + 1] = [m] * (i - filled)
                filled = i
                if filled >= n_max:
                    return table
        # unreachable while powers of two discriminate; widen and retry
        m_hi *= 2


def disc_closed_k1(n: int) -> DiscriminatorValue:
    """D_1(n) = min(s_n, t_n): s_n the least power of 2 >= n, t_n the least
    2^a 5^b >= 5n/3 with a, b >= 1."""
    if n < 1:
        raise PreconditionViolated("n must be >= 1")
    s = pow2_at_least(n)
    best = s
    five = 5
    while 2 * five < best:
        x = 2 * five
        while 3 * x < 5 * n:
            x *= 2
        best = min(best, x)
        five *= 5
    return DiscriminatorValue(n, best, "closed_k1")


def disc_closed_k2(n: int) -> DiscriminatorValue:
    """D_2(n) = min(2^e, 3 * 2^f), e >= 0 and f >= 1 least with value >= n."""
    if n < 1:
        raise PreconditionViolated("n must be >= 1")
    three = 6
    while three < n:
        three *= 2
    return DiscriminatorValue(n, min(pow2_at_least(n), three), "closed_k2")


EXCLUDED_MOD_25 = frozenset({2, 6, 7, 12, 17, 18, 22})


def is_covered(params) -> bool:
    k = as_params(params).k
    return k % 3 != 1 or k % 25 not in EXCLUDED_MOD_25


def _five_adic_pool(params):
    k = as_params(params).k
    if k % 3 != 1:
        return None
    return {1: "b5", 3: "ab5"}.get(k % 5)


def disc_structured(params, n: int) -> DiscriminatorValue:
    params = as_params(params)
    if n < 1:
        raise PreconditionViolated("n must be >= 1")
    if not is_covered(params):
        raise NotCovered(f"k={params.k} (mod 25 = {params.k % 25}) is not characterized")
    best = min_S(params, n)
    pool = _five_adic_pool(params)
    if pool:
        idx = candidate_index(params, pow2_at_least(n))
        c = least_at_least(getattr(idx, pool), -(-5 * n // 3))
        if c is not None and c < best:
            best = c
    return DiscriminatorValue(n, best, "structured")


def disc_auto(params, n: int) -> DiscriminatorValue:
    params = as_params(params)
    if params.k == 1:
        return disc_closed_k1(n)
    if params.k == 2:
        return disc_closed_k2(n)
    if is_covered(params):
        return disc_structured(params, n)
    return disc_bruteforce(params, n)


METHODS = {
    "brute": lambda params, n: disc_bruteforce(params, n),
    "structured": disc_structured,
    "auto": disc_auto,
}


def disc(params, n: int, method: str = "auto") -> DiscriminatorValue:
    if method == "closed":
        k = as_params(params).k
        if k == 1:
            return disc_closed_k1(n)
        if k == 2:
            return disc_closed_k2(n)
        raise PreconditionViolated("closed forms exist only for k = 1 and k = 2")
    try:
        return METHODS[method](params, n)
    except KeyError:
        raise PreconditionViolated(f"unknown method {method!r}") from None


def disc_values(params, n_max: int, method: str = "auto") -> list[int]:
    """[0, D(1), ..., D(n_max)] with the requested engine."""
    params = as_params(params)
    if method == "brute" or (method == "auto" and params.k > 2 and not is_covered(params)):
        return disc_bruteforce_table(params, n_max)
    return [0] + [disc(params, n, method).value for n in range(1, n_max + 1)]


def runs(values: list[int]) -> list[tuple[int, int, int]]:
    """Run-length encode [_, D(1), D(2), ...] as (n_lo, n_hi, value)."""
    out: list[tuple[int, int, int]] = []
    for n in range(1, len(values)):
        v = values[n]
        if out and out[-1][2] == v:
            out[-1] = (out[-1][0], n, v)
        else:
            out.append((n, n, v))
    return out


def _certifying_thresholds(params) -> dict[int, int]:
    k = params.k
    odd = sorted(p for p in prime_set(k) | prime_set(k + 1) if p != 2 and p < CERTIFY_PRIME_LIMIT)
    return {p: np_value(p, FIVE_THIRDS, even_required=True) for p in odd}


def exceptional_set(params, n_max: int | None = None) -> FkCertificate:
    """F_k = {D_k(n) : n <= N} minus A_k u B_k.

    Without ``n_max`` the scan stops at the least n_p(5/3) over odd primes
    p | k(k+1) below 10^4; past that point every value is min S_{k,n}, so
    the returned set is all of F_k.
    """
    params = as_params(params)
    if params.k < 2:
        raise PreconditionViolated("exceptional sets are defined for k >= 2")
    covered = is_covered(params)
    thresholds = _certifying_thresholds(params)
    p_cert = min(thresholds, key=lambda p: (thresholds[p], p)) if thresholds else None
    threshold = thresholds[p_cert] if p_cert else None
    if n_max is None:
        if not covered:
            raise NotCovered(f"k={params.k} needs an explicit n_max")
        if threshold is None:
            raise CapExceeded(f"no odd prime below {CERTIFY_PRIME_LIMIT} divides k(k+1)")
        n_max = threshold
    values = disc_values(params, n_max, "auto")
    found = sorted({v for v in values[1:]
                    if not (charsets.in_A(params, v) or charsets.in_B(params, v))})
    certified = covered and threshold is not None and n_max >= threshold
    return FkCertificate(params.k, tuple(found), n_max, certified,
                         p_cert, threshold, thresholds)


def verify_fixed_points(params, n_max: int) -> list[int]:
    """n <= n_max violating D_k(n) = n  <=>  n in A_k u B_k (brute force)."""
    params = as_params(params)
    if params.k <= 2:
        raise PreconditionViolated("the fixed-point characterization needs k > 2")
    table = disc_bruteforce_table(params, n_max)
    bad = []
    for n in range(1, n_max + 1):
        member = charsets.in_A(params, n) or charsets.in_B(params, n)
        if (table[n] == n) != member:
            bad.append(n)
    return bad
