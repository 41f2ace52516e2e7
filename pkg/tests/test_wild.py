import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from lucas_disc.appearance import z_value
from lucas_disc.disc import exceptional_set
from lucas_disc.errors import CapExceeded, PreconditionViolated
from lucas_disc.numth import primes_up_to
from lucas_disc.wild import (enumerate_Mp, fk_bound_log2log2, in_Mp,
                             pequals5_applies, potentially_wild, wild_screen)

TABLE2_K = (16, 73, 136, 148, 271, 283, 313)


@pytest.mark.parametrize("p,e,want", [(5, 3, True), (5, 1, False), (13, 7, True),
                                      (1933, 12, True), (2389, 9, True), (4993, 7, True)])
def test_in_Mp(p, e, want):
    assert in_Mp(p, e) is want


def test_one_never_in_Mp():
    assert not any(in_Mp(p, 1) for p in primes_up_to(10**4)[1:])


def test_in_Mp_preconditions():
    with pytest.raises(PreconditionViolated):
        in_Mp(5, 0)
    with pytest.raises(PreconditionViolated):
        in_Mp(2, 3)


@pytest.mark.parametrize("p,e_max,want", [(3, 10, [3, 5, 8, 10]), (17, 34, [11, 22, 34]),
                                          (5, 23, [3, 6, 9, 12, 15, 18, 21])])
def test_enumerate_Mp(p, e_max, want):
    assert enumerate_Mp(p, e_max) == want


def _window_empty(p, e):
    pe = p**e
    # no a with p^e (p+1) <= 2^(a+1) p and 2^a < p^e
    return not any(pe * (p + 1) <= (2 << a) * p for a in range(pe.bit_length()) if 2**a < pe)


def test_potentially_wild_examples():
    t6 = potentially_wild(10**50, 5, 200, 1)
    assert {(13, 7), (17, 11), (37, 19), (97, 5)} <= set(t6)
    t7 = potentially_wild(10**50, 3, 100, 3)
    assert {(3, 3), (7, 6), (11, 2), (19, 4), (43, 7)} <= set(t7)
    big = potentially_wild(10**50, 1900, 5000, 1)
    assert {(1933, 12), (2389, 9), (4993, 7)} <= set(big)
    for p, e in t6 + t7:
        assert p**e <= 10**50 and p % 4 == (1 if (p, e) in t6 else 3)
        assert _window_empty(p, e)


def test_potentially_wild_complete_small():
    got = set(potentially_wild(10**12, 3, 300))
    want = {(p, e) for p in primes_up_to(300)[1:] for e in range(1, 40)
            if p**e <= 10**12 and _window_empty(p, e)}
    assert got == want


def test_potentially_wild_cap():
    with pytest.raises(CapExceeded):
        potentially_wild(10**50, 3, 10**4, max_pairs=100)


def test_density():
    for p in (3, 5, 7):
        frac = len(enumerate_Mp(p, 10**5)) / 10**5
        assert abs(frac / math.log2(1 + 1 / p) - 1) < 0.05


def test_float_oracle_agrees():
    mpmath.mp.prec = 200
    for p in primes_up_to(100)[1:]:
        thr = 1 - mpmath.log(1 + mpmath.mpf(1) / p, 2)
        lp = mpmath.log(p, 2)
        for e in range(1, 200):
            x = e * lp
            gap = (x - mpmath.floor(x)) - thr
            if abs(gap) < mpmath.mpf(2) ** -150:
                # equality only at e = 1 for a Mersenne prime, where 2^a hits the window edge
                assert e == 1 and (p + 1) & p == 0 and not in_Mp(p, e)
                continue
            assert (gap > 0) == in_Mp(p, e), (p, e)


def test_wild_screen_examples():
    w = wild_screen(16, 250)
    assert w.verdict == "single_outside_power" and w.factor_outside == (5, 3)
    assert w.exponent_at_least_two and w.exponent_in_Mp and w.prime_is_five
    assert wild_screen(16, 34).verdict == "no_outside_prime"
    assert wild_screen(16, 45).verdict == "multiple_outside_primes"


def test_five_check_not_applicable():
    # z_k(25) = 15 fails for k = 4, so the p = 5 criterion does not apply
    assert not pequals5_applies(4)
    assert wild_screen(4, 3**2 * 4).prime_is_five is None


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 500), st.integers(2, 10**5))
def test_multiple_outside_halves(k, m):
    if wild_screen(k, m).verdict == "multiple_outside_primes":
        assert 2 * z_value(k, m) < m


def test_exceptional_values_screen():
    for k in TABLE2_K:
        for v in exceptional_set(k).values:
            w = wild_screen(k, v)
            assert w.factor_outside == (5, 3), (k, v)
            assert w.exponent_at_least_two and w.exponent_in_Mp
            assert w.prime_is_five in (True, None)


def test_fk_bound():
    assert fk_bound_log2log2(4) == pytest.approx(6.5327e9, rel=1e-4)
    assert fk_bound_log2log2(16) == pytest.approx(4.0791e10, rel=1e-4)
    vals = [fk_bound_log2log2(k) for k in range(4, 200)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    with pytest.raises(PreconditionViolated):
        fk_bound_log2log2(3)
