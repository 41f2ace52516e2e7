"""Integer utilities: factoring, primality, Legendre symbols, smooth numbers."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterable

from .errors import FactorizationIncomplete, NotOddPrime
from .seq import as_params

DEFAULT_TRIAL_CAP = 10**7

# Bases 2..37 make Miller-Rabin deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def trial_cap() -> int:
    """Trial-division cap, overridable through LUCAS_DISC_TRIAL_CAP."""
    raw = os.environ.get("LUCAS_DISC_TRIAL_CAP")
    if raw:
        return int(float(raw)) if "e" in raw.lower() else int(raw)
    return DEFAULT_TRIAL_CAP


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality; exact below 3.3e24, probabilistic (12 bases) above."""
    return is_probable_prime(n)


def _proven_prime(n: int) -> bool:
    return n < _MR_DETERMINISTIC_LIMIT and is_probable_prime(n)


def iroot(n: int, j: int) -> int:
    """floor(n ** (1/j)) for n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + j - 1) // j)
    while True:
        y = ((j - 1) * x + n // x ** (j - 1)) // j
        if y >= x:
            return x
        x = y


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs.

    When ``complete`` is false, ``cofactor`` holds the unfactored part
    (> 1) and the pairs cover only the primes found below the trial cap.
    """

    pairs: tuple[tuple[int, int], ...]
    complete: bool = True
    cofactor: int = 1

    @property
    def value(self) -> int:
        v = self.cofactor
        for p, e in self.pairs:
            v *= p**e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self):
        return format_factored(self.pairs) if self.complete else f"{format_factored(self.pairs)}*({self.cofactor})"


def format_factored(pairs) -> str:
    """'2^4*17' style rendering; the empty product renders as '1'."""
    if not pairs:
        return "1"
    return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in pairs)


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(r, j) with r prime and r**j == n, if n is such a power with j >= 2."""
    for j in range(2, n.bit_length() + 1):
        r = iroot(n, j)
        if r < 2:
            break
        if r**j == n:
            inner = _perfect_power(r)
            if inner:
                return inner[0], inner[1] * j
            if is_prime(r):
                return r, j
    return None


def factorize(n: int, cap: int | None = None) -> Factorization:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    if cap is None:
        cap = trial_cap()
    return _factorize(n, cap)


@lru_cache(maxsize=1 << 16)
def _factorize(n: int, cap: int) -> Factorization:
    found: dict[int, int] = {}
    rest = n
    for p in (2, 3, 5):
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
    # a large prime cofactor would otherwise cost a full trial loop
    done = rest < 2 or (rest > 10**10 and _proven_prime(rest))
    d, step = 7, 4  # 6k +- 1 wheel
    while not done and d * d <= rest and d <= cap:
        if rest % d == 0:
            while rest % d == 0:
                found[d] = found.get(d, 0) + 1
                rest //= d
            done = rest < 2 or (rest > 10**10 and _proven_prime(rest))
        d += step
        step = 6 - step
    complete = True
    if rest > 1:
        if d * d > rest or _proven_prime(rest):
            found[rest] = found.get(rest, 0) + 1
            rest = 1
        else:
            pp = _perfect_power(rest)
            if pp and pp[0] < _MR_DETERMINISTIC_LIMIT:
                found[pp[0]] = found.get(pp[0], 0) + pp[1]
                rest = 1
            else:
                complete = False
    return Factorization(tuple(sorted(found.items())), complete, rest)


def prime_set(n: int) -> frozenset[int]:
    f = factorize(n)
    if not f.complete:
        raise FactorizationIncomplete(f"could not fully factor {n}")
    return frozenset(f.primes)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def e_p(params, p: int) -> int:
    """The symbol (k(k+1)/p); zero exactly when p divides k(k+1)."""
    k = as_params(params).k
    return legendre(k * (k + 1), p)


def nu(p: int, n: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisors(f: Factorization) -> list[int]:
    if not f.complete:
        raise FactorizationIncomplete(f"factorization of {f.value} is incomplete")
    divs = [1]
    for p, e in f.pairs:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def smooth_numbers(primes: Iterable[int], lo: int, hi: int,
                   parity: str = "any", forbid_nine: bool = False) -> list[int]:
    """All m in [lo, hi] built from ``primes`` only, sorted ascending.

    ``parity`` is one of 'any', 'even', 'odd'; with ``forbid_nine`` the
    multiples of 9 are dropped.  Generated by product recursion, so the
    cost depends on the count of smooth numbers below ``hi`` and not on
    the width of the range.
    """
    if parity not in ("any", "even", "odd"):
        raise ValueError(f"unknown parity {parity!r}")
    ps = sorted(set(primes))
    if parity == "odd":
        ps = [p for p in ps if p != 2]
    out: list[int] = []
    if hi < 1:
        return out

    def walk(i: int, m: int):
        if i == len(ps):
            if m >= lo:
                out.append(m)
            return
        p = ps[i]
        while m <= hi:
            walk(i + 1, m)
            m *= p

    start = 1
    if parity == "even":
        if 2 not in ps:
            return out
        ps.remove(2)
        start = 2
        # powers of two >= 2 are handled by seeding the walk
        m = start
        while m <= hi:
            walk(0, m)
            m *= 2
    else:
        walk(0, start)
    if forbid_nine:
        out = [m for m in out if m % 9]
    out.sort()
    return out


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_between(lo: int, hi: int, segment: int = 1 << 20):
    """Yield primes in [lo, hi] with a segmented sieve."""
    if hi < 2:
        return
    lo = max(lo, 2)
    base = primes_up_to(isqrt(hi) + 1)
    for start in range(lo, hi + 1, segment):
        stop = min(start + segment, hi + 1)
        seg = bytearray([1]) * (stop - start)
        for p in base:
            if p * p >= stop:
                break
            first = max(p * p, (start + p - 1) // p * p)
            seg[first - start :: p] = bytearray(len(range(first, stop, p)))
        for i, flag in enumerate(seg):
            if flag:
                yield start + i
