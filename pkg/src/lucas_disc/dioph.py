"""Intervals [n, n*alpha) and the numbers 2^a * p^b they must contain.

n_p(alpha) is the least m such that [n, n*alpha) holds an even 2^a p^b for
every n >= m; n_p^o(alpha) drops the evenness.  alpha is an exact
rational and every comparison is done by cross-multiplying integers.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionViolated, SearchCapExceeded
from .numth import is_prime

EXPONENT_SEARCH_CAP = 10**4
ADMISSIBLE_CAP = 2 * 10**6  # elements enumerated by np_threshold


def as_ratio(alpha) -> Fraction:
    """Coerce '5/3', (5, 3), Fraction or int to a Fraction > 1."""
    if isinstance(alpha, tuple):
        alpha = Fraction(*alpha)
    r = Fraction(alpha)
    if r <= 1:
        raise PreconditionViolated(f"alpha must exceed 1, got {r}")
    return r


@dataclass(frozen=True)
class NpThreshold:
    p: int
    alpha: Fraction
    even_required: bool
    value: int
    witness_bad_n: int  # largest failing n, 0 if none


def _check_odd_prime(p: int):
    if p < 3 or not is_prime(p):
        raise PreconditionViolated(f"{p} is not an odd prime")


def base_exponents(p: int, alpha) -> tuple[int, int, int, int]:
    """Minimal f (with e) and g (with h) such that
    1 < p^f / 2^e < alpha and 1 < 2^h / p^g < alpha."""
    _check_odd_prime(p)
    alpha = as_ratio(alpha)
    num, den = alpha.numerator, alpha.denominator
    found_f = found_g = None
    pw = 1
    for x in range(1, EXPONENT_SEARCH_CAP + 1):
        pw *= p
        if found_f is None:
            e = pw.bit_length() - 1  # 2^e < p^x < 2^(e+1)
            if pw * den < num << e:
                found_f = (e, x)
        if found_g is None:
            h = pw.bit_length()  # p^x < 2^h
            if den << h < pw * num:
                found_g = (x, h)
        if found_f and found_g:
            return found_f[0], found_f[1], found_g[0], found_g[1]
    raise SearchCapExceeded(f"no exponents below {EXPONENT_SEARCH_CAP} for p={p}, alpha={alpha}")


@lru_cache(maxsize=256)
def admissible(p: int, even: bool, limit: int) -> tuple[int, ...]:
    """Sorted 2^a p^b <= limit, with a >= 1 when ``even``."""
    out = []
    q = 1
    while q * (2 if even else 1) <= limit:
        m = q * 2 if even else q
        while m <= limit:
            out.append(m)
            m *= 2
        q *= p
    out.sort()
    return tuple(out)


def admissible_count(p: int, even: bool, limit: int) -> int:
    """len(admissible(p, even, limit)) without building the list."""
    total, q = 0, 1
    while q * (2 if even else 1) <= limit:
        # a ranges over [1 or 0, bitlen(limit // q) - 1]
        total += (limit // q).bit_length() - (1 if even else 0)
        q *= p
    return total


def _failing_ns(elements, num: int, den: int):
    """Yield, per gap, the largest n whose interval [n, n*num/den) misses
    every element; ``elements`` must be sorted and start at the least
    admissible value."""
    prev = 0
    for x in elements:
        cand = x * den // num  # largest n with x >= n * num/den
        if cand > prev:
            yield cand
        prev = x


def np_threshold(p: int, alpha, even_required: bool = True) -> NpThreshold:
    _check_odd_prime(p)
    alpha = as_ratio(alpha)
    num, den = alpha.numerator, alpha.denominator
    e, _f, g, _h = base_exponents(p, alpha)
    bound = (1 << (e + 1)) * p**g
    limit = -(-bound * num // den)
    size = admissible_count(p, even_required, limit)
    if size > ADMISSIBLE_CAP:
        raise SearchCapExceeded(f"n_{p}({alpha}) needs {size} admissible elements "
                                f"(cap {ADMISSIBLE_CAP})")
    worst = 0
    for n in _failing_ns(admissible(p, even_required, limit), num, den):
        worst = max(worst, n)
    return NpThreshold(p, alpha, even_required, worst + 1, worst)


def np_value(p: int, alpha, even_required: bool = True) -> int:
    return np_threshold(p, alpha, even_required).value


def interval_contains(p: int, alpha, n: int, even_required: bool = True) -> int | None:
    """Least admissible 2^a p^b in [n, n*alpha), or None."""
    alpha = as_ratio(alpha)
    num, den = alpha.numerator, alpha.denominator
    limit = -(-n * num // den)
    # round the enumeration limit up so that the cache gets reused
    elems = admissible(p, even_required, 1 << limit.bit_length())
    i = bisect_left(elems, n)
    if i < len(elems) and elems[i] * den < n * num:
        return elems[i]
    return None


@dataclass(frozen=True)
class Coverage:
    ratio: Fraction
    n_start: int
    largest_failing: int  # 0 if none
    holds: bool  # no failure at or above n_start


def coverage_25(ratio_num: int, ratio_den: int, n_start: int) -> Coverage:
    """Largest n for which [ratio*n, n] holds no even 2^a 5^b.

    Above 2^(e+1) 5^g, with (e, f, g, h) the base exponents of 5 for
    1/ratio, every admissible value has a successor within the ratio, so
    enumerating a little beyond that point settles all n.
    """
    r = Fraction(ratio_num, ratio_den)
    if not 0 < r < 1:
        raise PreconditionViolated("ratio must lie strictly between 0 and 1")
    num, den = r.numerator, r.denominator
    e, _f, g, _h = base_exponents(5, 1 / r)
    top = max((1 << (e + 1)) * 5**g, n_start) * den // num + 1
    elems = admissible(5, True, top)
    worst = 0
    for lo, hi in zip(elems, elems[1:]):
        # n in [lo, hi) sees lo as the largest candidate; fails iff lo < r*n
        cand = hi - 1
        if cand * num > lo * den:
            worst = max(worst, cand)
    # below the least element (2) nothing is even: n = 1 fails
    worst = max(worst, 1)
    return Coverage(r, n_start, worst, worst < n_start)


def approachable(p: int, e: int) -> tuple[int, int] | None:
    """(a, b) with a >= 1, b >= 0 and 5(p+1)/(6p) p^e < 2^a 5^b < p^e.

    Returns the solution with the least a.
    """
    if e < 1:
        raise PreconditionViolated("e must be >= 1")
    pe = p**e
    lower_num = 5 * (p + 1) * pe  # compare against 6p * x
    a = 1
    while (1 << a) < pe:
        # largest b with 2^a 5^b < p^e
        x = 1 << a
        if x * 5 < pe:
            while x * 5 < pe:
                x *= 5
        if lower_num < 6 * p * x:
            b = 0
            y = x >> a
            while y > 1:
                y //= 5
                b += 1
            return a, b
        a += 1
    return None
