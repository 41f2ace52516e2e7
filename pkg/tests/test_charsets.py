import pytest
from hypothesis import given, settings, strategies as st

from lucas_disc import charsets
from lucas_disc.appearance import z_value
from lucas_disc.disc import disc_bruteforce
from lucas_disc.charsets import (charset_spec, enumerate_A5, enumerate_AB,
                                 enumerate_B5, in_A, in_A5, in_B, in_B5, in_P,
                                 min_S, pow2_at_least)


@pytest.mark.parametrize("k,m,want", [(16, 1, True), (15, 6, False), (5, 25, True),
                                      (15, 9, False), (6, 9, False), (3, 9, True)])
def test_in_A(k, m, want):
    assert in_A(k, m) is want


@pytest.mark.parametrize("k,m,want", [(2, 18, False), (2, 12, True), (16, 34, True),
                                      (16, 1, False), (6, 18, False), (3, 18, True)])
def test_in_B(k, m, want):
    assert in_B(k, m) is want


def test_five_adic_examples():
    assert in_B5(16, 250) and in_B5(16, 50)
    assert not in_B5(16, 125) and in_A5(16, 125)
    assert not in_A5(16, 2) and not in_B5(16, 2)


@pytest.mark.parametrize("k,n,want", [(16, 3, 4), (16, 33, 34), (99, 1, 1), (16, 137, 256)])
def test_min_S(k, n, want):
    assert min_S(k, n) == want


@pytest.mark.parametrize("k,lo,hi,want", [(16, 1, 20, [1, 2, 4, 8, 16]),
                                          (2, 1, 13, [1, 2, 4, 6, 8, 12]),
                                          (1, 9, 10, [])])
def test_enumerate_AB(k, lo, hi, want):
    assert enumerate_AB(k, lo, hi) == want
    # members are exactly the fixed points of D_k in the range
    assert want == [m for m in range(lo, hi + 1) if disc_bruteforce(k, m).value == m]


def test_prime_sets_nested():
    for k in range(1, 300):
        s = charset_spec(k)
        assert s.primes_of_k <= s.primes_of_k_times_k1
        assert 2 in s.primes_of_k_times_k1


def test_in_P():
    assert in_P(34, 272) and not in_P(45, 272) and in_P(1, 7)


def test_enumerations_match_membership():
    for k in (1, 2, 6, 16, 24, 30, 73):
        ab = enumerate_AB(k, 1, 5000)
        assert ab == [m for m in range(1, 5001) if in_A(k, m) or in_B(k, m)]
        assert enumerate_A5(k, 5000) == [m for m in range(1, 5001) if in_A5(k, m)]
        assert enumerate_B5(k, 5000) == [m for m in range(1, 5001) if in_B5(k, m)]


def test_sets_match_appearance():
    for k in range(1, 31):
        pk = charset_spec(k).primes_of_k
        for m in range(1, 2001):
            fixed = z_value(k, m) == m
            if m % 2:
                assert in_A(k, m) == (fixed and charsets._smooth_over(m, pk)), (k, m)
            else:
                assert in_B(k, m) == fixed, (k, m)


def test_one_mod_three_fixed_points():
    for k in (1, 4, 7, 10, 13, 16):
        for m in range(1, 2001):
            assert (z_value(k, m) == m) == in_P(m, k * (k + 1)), (k, m)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**5), st.integers(1, 10**6))
def test_min_S_bounds(k, n):
    v = min_S(k, n)
    assert n <= v <= pow2_at_least(n)
    assert in_A(k, v) or in_B(k, v)
