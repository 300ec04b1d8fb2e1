"""Group law on residues attached to a fixed quadratic residue mod N.

For an odd modulus N and a residue r, the elements are a point at infinity
plus every x in [0, N) with x^2 != r mod N, combined by

    x * y = (x*y + r) / (x + y)  mod N.

When r is a square with root w, the map x -> (x + w)/(x - w) carries this
law to plain multiplication mod N, so for prime N the elements form a cyclic
group of order N - 1 without any root of r ever being computed.  Over a
composite N the law can fail in two informative ways, both raised as
CompositeDetected: a non-invertible x + y yields a factor of N, and a product
landing on x^2 = r exhibits a pair of zero divisors.

A GroupContext is not safe to share across threads or processes; each worker
should build its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import CompositeDetected, Factor, ZeroDivisorPair

__all__ = [
    "Infinity",
    "INFINITY",
    "GroupElement",
    "GroupContext",
    "group_mul",
    "group_pow",
    "is_admissible",
    "to_unit_group",
    "from_unit_group",
]


class Infinity:
    """Identity element; a singleton, compared by identity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = Infinity()

GroupElement = Infinity | int


@dataclass
class GroupContext:
    """Modulus, defining residue, and a tally of modular multiplications."""

    n: int
    residue: int
    mult_count: int = 0

    def __post_init__(self) -> None:
        if self.n <= 3 or self.n % 2 == 0:
            raise ValueError(f"modulus must be odd and > 3, got {self.n}")
        self.residue %= self.n
        if self.residue in (0, 1) or self.residue == self.n - 1:
            raise ValueError(f"residue must lie in (1, n-1), got {self.residue}")


def is_admissible(ctx: GroupContext, x: GroupElement) -> bool:
    """True when x is the identity or a residue with x^2 != residue."""
    if x is INFINITY:
        return True
    return 0 <= x < ctx.n and x * x % ctx.n != ctx.residue


def group_mul(ctx: GroupContext, x: GroupElement, y: GroupElement) -> GroupElement:
    """Product of two elements; raises CompositeDetected when n betrays itself."""
    if x is INFINITY:
        return y
    if y is INFINITY:
        return x
    assert is_admissible(ctx, x) and is_admissible(ctx, y)
    n = ctx.n
    s = (x + y) % n
    if s == 0:
        return INFINITY
    d = gcd(s, n)
    if d != 1:
        raise CompositeDetected(Factor(d))
    product = (x * y + ctx.residue) * pow(s, -1, n) % n
    ctx.mult_count += 3
    if product * product % n == ctx.residue:
        raise CompositeDetected(ZeroDivisorPair(x, y, ctx.residue))
    return product


def group_pow(ctx: GroupContext, x: GroupElement, exponent: int) -> GroupElement:
    """x raised to a nonnegative exponent by square and multiply."""
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    result: GroupElement = INFINITY
    for bit in bin(exponent)[2:]:
        result = group_mul(ctx, result, result)
        if bit == "1":
            result = group_mul(ctx, result, x)
    return result


def to_unit_group(ctx: GroupContext, root: int, x: GroupElement) -> int:
    """Image of x under x -> (x + root)/(x - root), given root^2 = residue."""
    _check_root(ctx, root)
    if x is INFINITY:
        return 1
    if x % ctx.n in (root, (-root) % ctx.n):
        raise ValueError(f"{x} is +-root, which lies outside the group")
    return (x + root) * pow(x - root, -1, ctx.n) % ctx.n


def from_unit_group(ctx: GroupContext, root: int, b: int) -> GroupElement:
    """Preimage of a unit b != -1 under the map of to_unit_group."""
    _check_root(ctx, root)
    b %= ctx.n
    if b == 1:
        return INFINITY
    if b == 0 or gcd(b - 1, ctx.n) != 1:
        raise ValueError(f"{b} has no preimage (b - 1 must be invertible)")
    return root * (b + 1) % ctx.n * pow(b - 1, -1, ctx.n) % ctx.n


def _check_root(ctx: GroupContext, root: int) -> None:
    if root * root % ctx.n != ctx.residue:
        raise ValueError(f"{root}^2 != {ctx.residue} mod {ctx.n}")
