"""Square roots mod N = t*2^e + 1 without randomness and without factoring N-1.

Two stages.  First, a root of -1 is dug out of the powers j^(2t): the first
base whose power is not 1 sits inside the 2-power part of the group, and
repeated squaring walks it down to order four.  Second, roots of arbitrary
residues come from the quadgroup law: powering inside that group reaches the
unique element of order two, namely 0, and the unit-group image of the
element of order four divides out to a square root of the residue.

Either stage may instead uncover a proof that N is composite; that surfaces
as CompositeDetected carrying checkable evidence.  For prime N both stages
always succeed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import (
    CompositeDetected,
    Factor,
    FermatWitness,
    GroupOrderCount,
    OrderCount,
    ProthForm,
    SqrtMismatch,
)
from .modular import Tally, modpow
from .quadgroup import INFINITY, GroupContext, GroupElement, group_mul, group_pow

__all__ = ["InvalidWitnessError", "SqrtCounts", "sqrt_minus_one", "sqrt_mod"]


class InvalidWitnessError(ValueError):
    """The supplied root of -1 does not square to -1 mod N."""


@dataclass
class SqrtCounts:
    """Multiplication tallies for one sqrt_mod call, split by phase.

    scan covers the easy search for a small root and the hunt for a group
    element of full 2-power order; power covers the squarings, the final
    exponentiation, and the division back to a root.
    """

    scan: int = 0
    power: int = 0

    @property
    def total(self) -> int:
        return self.scan + self.power


def sqrt_minus_one(form: ProthForm, tally: Tally | None = None) -> int:
    """A square root of -1 mod form.n, or CompositeDetected.

    Deterministic: scans bases j = 1, 2, ... for the first one with
    j^(2t) != 1, then squares that power until it hits -1.  The result is
    the smallest-index root this procedure can produce.
    """
    n, t, e = form.n, form.t, form.e
    base = 0
    power = 0
    for j in range(1, 2 * t + 2):
        bj = modpow(j, 2 * t, n, tally)
        if bj != 1:
            base, power = j, bj
            break
    else:
        # 2t+1 distinct residues of order dividing 2t; a prime caps this at 2t.
        raise CompositeDetected(OrderCount(tuple(range(1, 2 * t + 2))))

    # seq[k] = power^(2^k); stop squaring at the first -1.
    seq = [power]
    x = power
    for k in range(e - 1):
        if x == n - 1:
            return modpow(base, t << k, n, tally)
        if k < e - 2:
            x = x * x % n
            if tally is not None:
                tally.add()
            seq.append(x)

    # No -1 showed up, so N is composite; finish the squarings to say why.
    x = seq[-1] * seq[-1] % n
    if tally is not None:
        tally.add()
    seq.append(x)  # seq[e-1] = power^(2^(e-1)) = base^(N-1)
    if seq[e - 1] != 1:
        raise CompositeDetected(FermatWitness(base))
    first_one = next(k for k in range(1, e) if seq[k] == 1)
    stuck = seq[first_one - 1]  # squares to 1 but is neither 1 nor -1
    d = gcd(stuck - 1, n)
    assert 1 < d < n
    raise CompositeDetected(Factor(d))


def sqrt_mod(
    form: ProthForm,
    value: int,
    sqrt_m1: int,
    counts: SqrtCounts | None = None,
) -> int:
    """A square root of value mod form.n, given a root of -1; or CompositeDetected.

    value must reduce into (1, n-1); sqrt_m1 must square to -1 mod n, else
    InvalidWitnessError.  Deterministic: the same arguments always produce the
    same root.  For prime n the result is one of the two roots; beyond the
    direct scan, which one depends on the sign of sqrt_m1.
    """
    n, t, e = form.n, form.t, form.e
    value %= n
    if value in (0, 1) or value == n - 1:
        raise ValueError(f"value must reduce into (1, n-1), got {value}")
    sqrt_m1 %= n
    if sqrt_m1 * sqrt_m1 % n != n - 1:
        raise InvalidWitnessError(f"{sqrt_m1}^2 != -1 mod {n}")
    d = gcd(sqrt_m1 + 1, n)
    if d != 1:
        raise CompositeDetected(Factor(d))

    # A root small enough to find by direct scan.
    for j in range(1, 2 * t):
        if j * j % n == value:
            if counts is not None:
                counts.scan += j
            return j
    if counts is not None:
        counts.scan += 2 * t - 1

    ctx = GroupContext(n, value)
    base = 0
    start: GroupElement = INFINITY
    for j in range(1, 2 * t):
        cj = group_pow(ctx, j, 2 * t)
        if cj is not INFINITY:
            base, start = j, cj
            break
    if counts is not None:
        counts.scan += ctx.mult_count
    if base == 0:
        # 2t-1 elements of order dividing 2t beyond the forced three; too many.
        raise CompositeDetected(GroupOrderCount(ctx.residue, members=tuple(range(1, 2 * t))))

    mark = ctx.mult_count
    x = start
    k0 = -1
    for k in range(e - 1):
        if x == 0:
            k0 = k
            break
        if k < e - 2:
            x = group_mul(ctx, x, x)
    if k0 < 0:
        # The 2-power orbit of base^(2t) dodges the sole element of order two.
        raise CompositeDetected(GroupOrderCount(ctx.residue, base=base))

    quarter = group_pow(ctx, base, t << k0)  # order four in the group
    if counts is not None:
        counts.power += ctx.mult_count - mark
    if quarter is INFINITY or quarter == 0:
        # Order at most two; impossible for prime n, and nothing to divide by.
        raise CompositeDetected(SqrtMismatch(0, ctx.residue))
    root = quarter * (sqrt_m1 - 1) % n * pow(sqrt_m1 + 1, -1, n) % n
    if counts is not None:
        counts.power += 3
    if root * root % n != value:
        raise CompositeDetected(SqrtMismatch(root, ctx.residue))
    return root
