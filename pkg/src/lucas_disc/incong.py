"""Incongruence index: the largest j with U_0..U_{j-1} pairwise distinct mod m."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, PreconditionViolated
from .seq import as_params

SCAN_CAP = 10**7


@dataclass(frozen=True)
class IncongruenceValue:
    m: int
    iota: int
    method: str  # "scan" or "closed_form_5power"


def iota_scan(params, m: int, cap: int = SCAN_CAP) -> IncongruenceValue:
    params = as_params(params)
    if m < 1:
        raise PreconditionViolated("m must be >= 1")
    if m > cap:
        raise CapExceeded(f"modulus {m} exceeds scan cap {cap}")
    seen = bytearray(m)
    t = params.trace % m
    a, b = 0, 1 % m
    i = 0
    while not seen[a]:
        seen[a] = 1
        a, b = b, (t * b - a) % m
        i += 1
    return IncongruenceValue(m, i, "scan")


def iota_5power(params, b: int) -> IncongruenceValue:
    """Closed form for iota_k(5^b) when 5 is inert and z(25) = 15."""
    k = as_params(params).k
    if b < 1:
        raise PreconditionViolated("b must be >= 1")
    base = 3 * 5 ** (b - 1)
    if k % 5 == 1 and k % 25 != 6:
        value = (base + 1) // 2
    elif k % 5 == 3 and k % 25 != 18:
        value = base
    else:
        raise PreconditionViolated(f"no closed form for k={k} (k mod 25 = {k % 25})")
    return IncongruenceValue(5**b, value, "closed_form_5power")
