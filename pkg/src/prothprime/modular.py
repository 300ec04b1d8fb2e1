"""Modular arithmetic helpers with optional operation counting.

All residues returned by this module are canonical, i.e. in [0, modulus).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

__all__ = ["Tally", "NoInverseError", "gcd", "modpow", "modinv", "v2"]


@dataclass
class Tally:
    """Mutable counter for modular multiplications (a squaring counts as one)."""

    count: int = 0

    def add(self, n: int = 1) -> None:
        self.count += n


class NoInverseError(ValueError):
    """Raised when an inverse does not exist; carries the offending gcd."""

    def __init__(self, value: int, modulus: int, d: int):
        super().__init__(f"{value} is not invertible mod {modulus} (gcd {d})")
        self.gcd = d


def modpow(base: int, exponent: int, modulus: int, tally: Tally | None = None) -> int:
    """base**exponent mod modulus for exponent >= 0.

    Without a tally this defers to the builtin pow.  With one, a square-and-
    multiply ladder is used so every modular multiplication is counted.
    """
    if modulus <= 1:
        raise ValueError(f"modulus must be > 1, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    if tally is None:
        return pow(base, exponent, modulus)
    if exponent == 0:
        return 1 % modulus
    acc = base % modulus
    result = acc
    for bit in bin(exponent)[3:]:  # remaining bits after the leading 1
        result = result * result % modulus
        tally.add()
        if bit == "1":
            result = result * acc % modulus
            tally.add()
    return result


def modinv(value: int, modulus: int) -> int:
    """Inverse of value mod modulus, or NoInverseError carrying gcd(value, modulus)."""
    if modulus <= 1:
        raise ValueError(f"modulus must be > 1, got {modulus}")
    value %= modulus
    d = gcd(value, modulus)
    if d != 1:
        raise NoInverseError(value, modulus, d)
    return pow(value, -1, modulus)


def v2(value: int) -> int:
    """2-adic valuation: the largest k with 2**k dividing value (value > 0)."""
    if value <= 0:
        raise ValueError(f"v2 needs a positive integer, got {value}")
    return (value & -value).bit_length() - 1
