"""Index of appearance z_k(m): the least n >= 1 with m | U_n(k)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .errors import FactorizationIncomplete, GuardExceeded
from .numth import divisors, e_p, factorize, trial_cap
from .seq import as_params, u_mod

INITIAL_GUARD = 2


@dataclass(frozen=True)
class AppearanceValue:
    m: int
    z: int
    components: tuple[tuple[int, int], ...]  # (prime power, z of it)


def z_prime(params, p: int) -> int:
    params = as_params(params)
    return _z_prime(params.k, p, trial_cap())


@lru_cache(maxsize=1 << 16)
def _z_prime(k: int, p: int, cap: int) -> int:
    if (k * (k + 1)) % p == 0:
        return p
    target = p - e_p(k, p)
    f = factorize(target, cap)
    if not f.complete:
        raise FactorizationIncomplete(f"cannot factor {target} = p - e_p(k) for p = {p}")
    for d in divisors(f):
        if u_mod(k, d, p) == 0:
            return d
    raise AssertionError(f"no divisor of {target} is the appearance index of {p}")


def padic_valuation_guarded(params, n: int, p: int, b: int, guard: int) -> int:
    """nu_p(U_n) read off U_n mod p^(b+guard).

    Raises GuardExceeded when the residue vanishes at that precision.
    """
    modulus = p ** (b + guard)
    r = u_mod(params, n, modulus)
    if r == 0:
        raise GuardExceeded(f"nu_{p}(U_{n}) >= {b + guard}")
    v = 0
    while r % p == 0:
        r //= p
        v += 1
    return v


def z_prime_power(params, p: int, b: int) -> int:
    """z(p^b) = p^max(b - nu_p(U_{z(p)}), 0) * z(p)."""
    params = as_params(params)
    return _z_prime_power(params.k, p, b, trial_cap())


@lru_cache(maxsize=1 << 16)
def _z_prime_power(k: int, p: int, b: int, cap: int) -> int:
    zp = _z_prime(k, p, cap)
    if b == 1:
        return zp
    guard = INITIAL_GUARD
    while True:
        try:
            v = padic_valuation_guarded(k, zp, p, b, guard)
            break
        except GuardExceeded:
            guard *= 2
    return p ** max(b - v, 0) * zp


def z(params, m: int) -> AppearanceValue:
    params = as_params(params)
    if m < 1:
        raise ValueError("m must be >= 1")
    f = factorize(m)
    if not f.complete:
        raise FactorizationIncomplete(f"cannot factor {m} under the trial cap")
    comps = tuple((p**b, z_prime_power(params, p, b)) for p, b in f.pairs)
    return AppearanceValue(m, lcm(*(c for _, c in comps)) if comps else 1, comps)


def z_value(params, m: int) -> int:
    return z(params, m).z


def z_scan(params, m: int, limit: int | None = None) -> int:
    """Reference z(m) by stepping the recurrence mod m (test oracle)."""
    params = as_params(params)
    if m == 1:
        return 1
    t = params.trace % m
    a, b = 0, 1
    n = 0
    limit = limit or 4 * m + 4
    while n < limit:
        a, b = b, (t * b - a) % m
        n += 1
        if a == 0:
            return n
    raise AssertionError(f"no appearance of {m} below {limit}")


def is_special(params, p: int) -> bool:
    """p | k(k+1) and p^2 | U_p(k)."""
    params = as_params(params)
    k = params.k
    special = (k * (k + 1)) % p == 0 and u_mod(params, p, p * p) == 0
    if p == 3:
        assert special == (k % 9 in (2, 6)), f"3-special criterion disagrees for k={k}"
    return special
