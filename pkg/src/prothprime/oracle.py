"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is deliberately naive; correctness is meant to be obvious by
inspection.  Guards keep the quadratic/linear scans inside a sane budget.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

__all__ = ["is_prime_trial", "brute_sqrt", "mult_order"]

_TRIAL_LIMIT = 2**64
_SQRT_LIMIT = 10**7
_ORDER_LIMIT = 10**7


@lru_cache(maxsize=65536)
def is_prime_trial(n: int) -> bool:
    """Primality by trial division up to sqrt(n).  Requires n < 2^64."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"expected an integer, got {n!r}")
    if n >= _TRIAL_LIMIT:
        raise ValueError(f"trial division limited to n < 2^64, got {n}")
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def brute_sqrt(n: int, value: int) -> set[int]:
    """All x in [0, n) with x^2 = value mod n, by exhaustive scan.  n <= 10^7."""
    if n <= 0 or n > _SQRT_LIMIT:
        raise ValueError(f"modulus must be in (0, {_SQRT_LIMIT}], got {n}")
    value %= n
    return {x for x in range(n) if x * x % n == value}


def mult_order(p: int, a: int) -> int:
    """Multiplicative order of a mod p for prime p <= 10^7 and gcd(a, p) = 1."""
    if p > _ORDER_LIMIT or not is_prime_trial(p):
        raise ValueError(f"p must be a prime <= {_ORDER_LIMIT}, got {p}")
    a %= p
    if gcd(a, p) != 1:
        raise ValueError(f"{a} is not a unit mod {p}")
    order = 1
    x = a
    while x != 1:
        x = x * a % p
        order += 1
    return order
