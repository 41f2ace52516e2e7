"""Exponent sets M_p, potentially wild prime powers, wildness screening.

e lies in M_p exactly when no power of two falls in [p^e (p+1)/(2p), p^e).
The only candidate is 2^a with a = floor(e log2 p), so membership is a
single exact integer comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .appearance import z_prime_power
from .errors import CapExceeded, FactorizationIncomplete, PreconditionViolated
from .numth import factorize, primes_between
from .seq import as_params

MAX_PAIRS = 10**7


def _in_Mp_power(p: int, pe: int) -> bool:
    a = pe.bit_length() - 1  # 2^a < p^e < 2^(a+1) for odd p^e > 1
    # a power of two in the window iff 2^a >= p^e (p+1)/(2p)
    return (p << (a + 1)) < pe * (p + 1)


def in_Mp(p: int, e: int) -> bool:
    if e < 1:
        raise PreconditionViolated("e must be >= 1")
    if p < 3 or p % 2 == 0:
        raise PreconditionViolated(f"{p} is not an odd prime")
    return _in_Mp_power(p, p**e)


def enumerate_Mp(p: int, e_max: int) -> list[int]:
    out = []
    pe = 1
    for e in range(1, e_max + 1):
        pe *= p
        if _in_Mp_power(p, pe):
            out.append(e)
    return out


def potentially_wild(pe_limit: int, p_min: int, p_max: int,
                     residue_mod4: int | None = None,
                     max_pairs: int = MAX_PAIRS) -> list[tuple[int, int]]:
    """All (p, e) with p prime in [p_min, p_max], p^e <= pe_limit, e in M_p."""
    if residue_mod4 not in (None, 1, 3):
        raise PreconditionViolated("residue_mod4 must be 1 or 3")
    budget = max_pairs
    out = []
    for p in primes_between(max(p_min, 3), p_max):
        if residue_mod4 is not None and p % 4 != residue_mod4:
            continue
        if p * p > pe_limit:
            # e = 1 is never in M_p, so nothing further can qualify
            break
        pe, e = p, 1
        while pe <= pe_limit:
            budget -= 1
            if budget < 0:
                raise CapExceeded(f"more than {max_pairs} (p, e) pairs to test")
            if e > 1 and _in_Mp_power(p, pe):
                out.append((p, e))
            pe *= p
            e += 1
    return out


@dataclass(frozen=True)
class WildClassification:
    m: int
    verdict: str  # no_outside_prime | single_outside_power | multiple_outside_primes
    factor_outside: tuple[int, int] | None = None
    exponent_at_least_two: bool | None = None
    exponent_in_Mp: bool | None = None
    # None when the p = 5 criterion does not apply to this k
    prime_is_five: bool | None = None


def pequals5_applies(params) -> bool:
    """k = 1 mod 3 and z_k(25) = 15."""
    params = as_params(params)
    return params.k % 3 == 1 and z_prime_power(params, 5, 2) == 15


def wild_screen(params, m: int) -> WildClassification:
    params = as_params(params)
    k = params.k
    f = factorize(m)
    if not f.complete:
        raise FactorizationIncomplete(f"cannot factor {m}")
    kk1 = k * (k + 1)
    outside = [(p, e) for p, e in f.pairs if kk1 % p]
    if not outside:
        return WildClassification(m, "no_outside_prime")
    if len(outside) > 1:
        return WildClassification(m, "multiple_outside_primes")
    p, e = outside[0]
    five = (p == 5) if pequals5_applies(params) else None
    return WildClassification(m, "single_outside_power", (p, e),
                              e >= 2, in_Mp(p, e), five)


def fk_bound_log2log2(k: int) -> float:
    """log2 log2 of the bound 2^(k^(10^10 log log k)) on max F_k."""
    if k <= 3:
        raise PreconditionViolated("the bound is stated for k > 3")
    return 1e10 * math.log(math.log(k)) * math.log2(k)
