"""rho_k, sigma_k, tau_k and the congruence classes behind them.

Each is a supremum of z(f(p))/f(p) over values below 1, with f(p) = p,
p^2 and 2p^2 respectively.  When a witness prime q exists, with
z(q) = (q+1)/2, z(q^2) = q(q+1)/2 or z(2q^2) = q(q+1), the least such q
gives the value (q+1)/(2q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .appearance import z_prime, z_prime_power, z_value
from .errors import CountMismatch, PreconditionViolated
from .numth import is_prime, primes_up_to
from .seq import as_params

DEFAULT_PRIME_CAP = 1000
KINDS = ("rho", "sigma", "tau")


@dataclass(frozen=True)
class RatioResult:
    kind: str
    witness: int | None  # q for an exact value
    cap: int | None = None  # search bound when undetermined

    @property
    def exact(self) -> bool:
        return self.witness is not None

    @property
    def value(self) -> Fraction | None:
        if self.witness is None:
            return None
        return Fraction(self.witness + 1, 2 * self.witness)

    def __str__(self):
        if self.exact:
            return str(self.value)
        return f"undetermined (no witness <= {self.cap})"


def is_witness(params, kind: str, q: int) -> bool:
    params = as_params(params)
    if (params.k * (params.k + 1)) % q == 0:
        return False
    if kind == "rho":
        return z_prime(params, q) == (q + 1) // 2
    if kind == "sigma":
        return z_prime_power(params, q, 2) == q * (q + 1) // 2
    if kind == "tau":
        return z_value(params, 2 * q * q) == q * (q + 1)
    raise PreconditionViolated(f"unknown ratio kind {kind!r}")


def _least_witness(params, kind: str, cap: int) -> RatioResult:
    for q in primes_up_to(cap):
        if q > 2 and is_witness(params, kind, q):
            return RatioResult(kind, q)
    return RatioResult(kind, None, cap)


def rho(params, prime_cap: int = DEFAULT_PRIME_CAP) -> RatioResult:
    return _least_witness(params, "rho", prime_cap)


def sigma(params, prime_cap: int = DEFAULT_PRIME_CAP) -> RatioResult:
    return _least_witness(params, "sigma", prime_cap)


def tau(params, prime_cap: int = DEFAULT_PRIME_CAP) -> RatioResult:
    return _least_witness(params, "tau", prime_cap)


def ratios(params, prime_cap: int = DEFAULT_PRIME_CAP) -> tuple[RatioResult, RatioResult, RatioResult]:
    return rho(params, prime_cap), sigma(params, prime_cap), tau(params, prime_cap)


def triple_feasible(p1: int, p2: int, p3: int) -> bool:
    """Whether some k has (rho, sigma, tau) witnessed by (p1, p2, p3)."""
    if not (3 <= p1 <= p2 <= p3):
        return False
    if p3 % 4 != 1:
        return False
    if p2 % 4 == 1 and p3 != p2:
        return False
    return True


def find_triple_k(p1: int, p2: int, p3: int, k_max: int) -> list[int] | None:
    """All k <= k_max realizing the triple; None when it is infeasible."""
    for p in (p1, p2, p3):
        if p < 3 or not is_prime(p):
            raise PreconditionViolated(f"{p} is not an odd prime")
    if not triple_feasible(p1, p2, p3):
        return None
    hits = []
    for k in range(1, k_max + 1):
        params = as_params(k)
        if all(_least_witness(params, kind, p).witness == p
               for kind, p in zip(KINDS, (p1, p2, p3))):
            hits.append(k)
    return hits


def totient(n: int) -> int:
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def expected_class_count(p: int, case: str) -> int:
    f = totient((p + 1) // 2)
    return {"a": f, "b": f, "c": (p - 1) * f, "d": p - f - 2}[case]


def count_classes(p: int, case: str) -> tuple[int, list[int]]:
    """Residues of k (mod p for cases a, d; mod p^2 for b, c), with
    p not dividing k(k+1), such that
      a: z_k(p) = (p+1)/2        b: z_k(p^2) = (p+1)/2
      c: z_k(p^2) = p(p+1)/2     d: z_k(p) < (p+1)/2
    """
    if p < 3 or not is_prime(p):
        raise PreconditionViolated(f"{p} is not an odd prime")
    if case not in ("a", "b", "c", "d"):
        raise PreconditionViolated(f"unknown case {case!r}")
    half = (p + 1) // 2
    modulus = p if case in ("a", "d") else p * p
    hits = []
    for k in range(modulus):
        if k % p in (0, p - 1):
            continue
        # z_k depends on k only through k mod p^b; shift 0 to a positive rep
        rep = k or modulus
        if case == "a":
            ok = z_prime(rep, p) == half
        elif case == "d":
            ok = z_prime(rep, p) < half
        elif case == "b":
            ok = z_prime_power(rep, p, 2) == half
        else:
            ok = z_prime_power(rep, p, 2) == p * half
        if ok:
            hits.append(k)
    want = expected_class_count(p, case)
    if len(hits) != want:
        raise CountMismatch(f"p={p} case {case}: found {len(hits)} classes, formula gives {want}")
    return len(hits), hits
