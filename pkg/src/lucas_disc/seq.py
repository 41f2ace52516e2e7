"""The Shallit sequences U(k): U_0 = 0, U_1 = 1, U_{n+2} = (4k+2) U_{n+1} - U_n.

The characteristic roots are alpha = 2k+1 + 2*sqrt(k(k+1)) and 1/alpha, so
U_n = (alpha^n - alpha^-n) / (alpha - 1/alpha).  That closed form is only
documentation here; every evaluation below runs the integer recurrence or
its doubling formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded, PreconditionViolated

EXACT_CAP = 10**5


@dataclass(frozen=True)
class SequenceParams:
    k: int
    trace: int = field(init=False, repr=False)
    discriminant: int = field(init=False, repr=False)

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise PreconditionViolated(f"k must be a positive integer, got {self.k!r}")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "trace", 4 * self.k + 2)
        object.__setattr__(self, "discriminant", 16 * self.k * (self.k + 1))


def as_params(k: int | SequenceParams) -> SequenceParams:
    """Accept either a bare k or an existing SequenceParams."""
    if isinstance(k, SequenceParams):
        return k
    return SequenceParams(k)


def u_exact(params, n: int, cap: int = EXACT_CAP) -> int:
    """U_n(k) as an exact integer, by running the recurrence n steps."""
    params = as_params(params)
    if n < 0:
        raise PreconditionViolated("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the exact-evaluation cap {cap}")
    t = params.trace
    a, b = 0, 1
    for _ in range(n):
        a, b = b, t * b - a
    return a


def u_pair_mod(params, n: int, m: int) -> tuple[int, int]:
    """(U_n mod m, U_{n+1} mod m) by fast doubling.

    With Q = 1 the doubling identities are
        U_{2j}   = U_j (2 U_{j+1} - P U_j)
        U_{2j+1} = U_{j+1}^2 - U_j^2
    where P = 4k+2 is the trace.
    """
    params = as_params(params)
    if m < 1:
        raise PreconditionViolated("modulus must be >= 1")
    if n < 0:
        raise PreconditionViolated("n must be nonnegative")
    if m == 1:
        return 0, 0
    t = params.trace % m
    a, b = 0, 1
    for bit in bin(n)[2:]:
        a, b = a * (2 * b - t * a) % m, (b * b - a * a) % m
        if bit == "1":
            a, b = b, (t * b - a) % m
    return a, b


def u_mod(params, n: int, m: int) -> int:
    """U_n(k) mod m in O(log n) multiplications."""
    return u_pair_mod(params, n, m)[0]


def u_iter_mod(params, count: int, m: int):
    """Yield U_0, ..., U_{count-1} reduced mod m."""
    params = as_params(params)
    t = params.trace % m
    a, b = 0, 1 % m
    for _ in range(count):
        yield a
        a, b = b, (t * b - a) % m
