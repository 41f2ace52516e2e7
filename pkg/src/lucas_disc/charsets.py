"""The smooth sets A_k, B_k, their 5-adic extensions, and min S_{k,n}.

A_k: odd m whose primes all divide k (9 | m excluded when k = 6 mod 9).
B_k: even m whose primes all divide k(k+1) (9 | m excluded when
     k = 2 or 6 mod 9).
A_{5,k}, B_{5,k}: a * 5^b with b >= 1 and a in A_k resp. B_k.
"""

from __future__ import annotations

import threading
from bisect import bisect_left
from dataclasses import dataclass

from .numth import prime_set, smooth_numbers
from .seq import as_params


@dataclass(frozen=True)
class CharSetSpec:
    k: int
    primes_of_k: frozenset[int]
    primes_of_k_times_k1: frozenset[int]
    k_mod_9: int
    k_mod_25: int

    @property
    def a_forbids_nine(self) -> bool:
        return self.k_mod_9 == 6

    @property
    def b_forbids_nine(self) -> bool:
        return self.k_mod_9 in (2, 6)


_spec_cache: dict[int, CharSetSpec] = {}


def charset_spec(params) -> CharSetSpec:
    k = as_params(params).k
    spec = _spec_cache.get(k)
    if spec is None:
        pk = prime_set(k)
        spec = CharSetSpec(k, pk, pk | prime_set(k + 1), k % 9, k % 25)
        _spec_cache[k] = spec
    return spec


def _smooth_over(m: int, primes) -> bool:
    for p in primes:
        while m % p == 0:
            m //= p
    return m == 1


def in_A(params, m: int) -> bool:
    s = charset_spec(params)
    if m < 1 or m % 2 == 0:
        return False
    if s.a_forbids_nine and m % 9 == 0:
        return False
    return _smooth_over(m, s.primes_of_k)


def in_B(params, m: int) -> bool:
    s = charset_spec(params)
    if m < 1 or m % 2:
        return False
    if s.b_forbids_nine and m % 9 == 0:
        return False
    return _smooth_over(m, s.primes_of_k_times_k1)


def in_P(m: int, n: int) -> bool:
    """m in P(n): every prime factor of m divides n."""
    return m >= 1 and _smooth_over(m, prime_set(n))


def _split_five(m: int) -> tuple[int, int]:
    b = 0
    while m % 5 == 0:
        m //= 5
        b += 1
    return m, b


def in_A5(params, m: int) -> bool:
    a, b = _split_five(m)
    return b >= 1 and in_A(params, a)


def in_B5(params, m: int) -> bool:
    a, b = _split_five(m)
    return b >= 1 and in_B(params, a)


def enumerate_A(params, lo: int, hi: int) -> list[int]:
    s = charset_spec(params)
    return smooth_numbers(s.primes_of_k, lo, hi, "odd", s.a_forbids_nine)


def enumerate_B(params, lo: int, hi: int) -> list[int]:
    s = charset_spec(params)
    return smooth_numbers(s.primes_of_k_times_k1, lo, hi, "even", s.b_forbids_nine)


def enumerate_AB(params, lo: int, hi: int) -> list[int]:
    if lo > hi:
        raise ValueError("need lo <= hi")
    return sorted(enumerate_A(params, lo, hi) + enumerate_B(params, lo, hi))


def _times_fives(base: list[int], hi: int) -> list[int]:
    out = []
    for a in base:
        if a % 5 == 0:
            continue
        m = a * 5
        while m <= hi:
            out.append(m)
            m *= 5
    out.sort()
    return out


def enumerate_A5(params, hi: int) -> list[int]:
    return _times_fives(enumerate_A(params, 1, hi // 5), hi)


def enumerate_B5(params, hi: int) -> list[int]:
    return _times_fives(enumerate_B(params, 1, hi // 5), hi)


class _CandidateIndex:
    """Sorted A_k u B_k and B_{5,k} / A_{5,k} u B_{5,k} lists up to a limit."""

    def __init__(self, params, limit: int):
        self.limit = limit
        self.ab = enumerate_AB(params, 1, limit)
        self.b5 = enumerate_B5(params, limit)
        self.ab5 = sorted(enumerate_A5(params, limit) + self.b5)


_index_cache: dict[int, _CandidateIndex] = {}
_index_lock = threading.Lock()


def candidate_index(params, need: int) -> _CandidateIndex:
    params = as_params(params)
    idx = _index_cache.get(params.k)
    if idx is not None and idx.limit >= need:
        return idx
    with _index_lock:
        idx = _index_cache.get(params.k)
        if idx is None or idx.limit < need:
            limit = 1 << max(need - 1, 1).bit_length()
            if idx is not None:
                limit = max(limit, 2 * idx.limit)
            idx = _CandidateIndex(params, limit)
            _index_cache[params.k] = idx
    return idx


def pow2_at_least(n: int) -> int:
    return 1 if n <= 1 else 1 << (n - 1).bit_length()


def min_S(params, n: int) -> int:
    """Least m >= n lying in A_k u B_k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    bound = pow2_at_least(n)
    idx = candidate_index(params, bound)
    return idx.ab[bisect_left(idx.ab, n)]


def least_at_least(values: list[int], n: int) -> int | None:
    i = bisect_left(values, n)
    return values[i] if i < len(values) else None
