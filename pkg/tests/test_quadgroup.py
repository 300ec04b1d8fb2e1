"""Tests for the group law attached to a quadratic residue."""

import pytest

from prothprime.core import CompositeDetected, Factor, ZeroDivisorPair
from prothprime.quadgroup import (
    INFINITY,
    GroupContext,
    from_unit_group,
    group_mul,
    group_pow,
    is_admissible,
    to_unit_group,
)


def ctx13() -> GroupContext:
    return GroupContext(13, 3)


class TestGroupContext:
    def test_residue_is_reduced(self):
        assert GroupContext(13, 16).residue == 3

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            GroupContext(12, 5)
        with pytest.raises(ValueError):
            GroupContext(3, 2)

    def test_rejects_degenerate_residue(self):
        for residue in (0, 1, 12, 13):
            with pytest.raises(ValueError):
                GroupContext(13, residue)


class TestAdmissibility:
    def test_square_roots_of_the_residue_are_excluded(self):
        ctx = ctx13()
        assert not is_admissible(ctx, 4)  # 4^2 = 3 mod 13
        assert not is_admissible(ctx, 9)
        assert is_admissible(ctx, 0)
        assert is_admissible(ctx, 1)
        assert is_admissible(ctx, INFINITY)
        assert sum(is_admissible(ctx, x) for x in range(13)) == 11


class TestGroupMul:
    def test_identity(self):
        ctx = ctx13()
        assert group_mul(ctx, INFINITY, 7) == 7
        assert group_mul(ctx, 7, INFINITY) == 7
        assert group_mul(ctx, INFINITY, INFINITY) is INFINITY

    def test_example_product(self):
        assert group_mul(ctx13(), 1, 2) == 6

    def test_inverse_pair_lands_on_identity(self):
        assert group_mul(ctx13(), 5, 8) is INFINITY

    def test_counts_three_multiplications_per_product(self):
        ctx = ctx13()
        group_mul(ctx, 1, 2)
        assert ctx.mult_count == 3
        group_mul(ctx, INFINITY, 7)
        group_mul(ctx, 5, 8)
        assert ctx.mult_count == 3

    def test_noninvertible_sum_splits_the_modulus(self):
        ctx = GroupContext(15, 4)
        with pytest.raises(CompositeDetected) as exc:
            group_mul(ctx, 1, 4)
        assert exc.value.evidence == Factor(5)

    def test_product_landing_on_a_root_is_a_zero_divisor_pair(self):
        ctx = GroupContext(21, 4)
        with pytest.raises(CompositeDetected) as exc:
            group_mul(ctx, 1, 9)  # (1*9 + 4)/(1 + 9) = 16, and 16^2 = 4 mod 21
        assert exc.value.evidence == ZeroDivisorPair(1, 9, 4)


class TestGroupPow:
    def test_zero_exponent_is_identity(self):
        assert group_pow(ctx13(), 5, 0) is INFINITY

    def test_zero_has_order_two(self):
        assert group_pow(ctx13(), 0, 2) is INFINITY

    def test_element_orders(self):
        ctx = ctx13()
        assert group_pow(ctx, 2, 3) == 0  # halfway to the identity
        assert group_pow(ctx, 2, 6) is INFINITY
        assert group_pow(ctx, 1, 12) is INFINITY

    def test_every_element_has_order_dividing_group_order(self):
        for n in (13, 17):
            for residue in range(2, n - 1):
                if all(x * x % n != residue for x in range(n)):
                    continue  # only squares give a group of order n - 1
                ctx = GroupContext(n, residue)
                for x in list(range(n)) + [INFINITY]:
                    if is_admissible(ctx, x):
                        assert group_pow(ctx, x, n - 1) is INFINITY

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            group_pow(ctx13(), 2, -1)


class TestUnitGroupBridge:
    def test_examples(self):
        ctx = ctx13()
        assert to_unit_group(ctx, 4, INFINITY) == 1
        assert to_unit_group(ctx, 4, 0) == 12
        assert to_unit_group(ctx, 4, 1) == 7

    def test_round_trip(self):
        ctx = ctx13()
        for root in (4, 9):
            for x in list(range(13)) + [INFINITY]:
                if not is_admissible(ctx, x):
                    continue
                image = to_unit_group(ctx, root, x)
                back = from_unit_group(ctx, root, image)
                assert (back is INFINITY and x is INFINITY) or back == x

    def test_carries_the_law_to_multiplication(self):
        root = 4
        elements = [x for x in range(13) if is_admissible(ctx13(), x)] + [INFINITY]
        images = {}
        for x in elements:
            key = x if isinstance(x, int) else "inf"
            images[key] = to_unit_group(ctx13(), root, x)
        for x in elements:
            for y in elements:
                product = group_mul(ctx13(), x, y)
                kx = x if isinstance(x, int) else "inf"
                ky = y if isinstance(y, int) else "inf"
                kp = product if isinstance(product, int) else "inf"
                assert images[kp] == images[kx] * images[ky] % 13

    def test_rejects_points_outside_the_group(self):
        ctx = ctx13()
        with pytest.raises(ValueError):
            to_unit_group(ctx, 4, 4)
        with pytest.raises(ValueError):
            to_unit_group(ctx, 4, 9)

    def test_rejects_wrong_root(self):
        with pytest.raises(ValueError):
            to_unit_group(ctx13(), 5, 1)
        with pytest.raises(ValueError):
            from_unit_group(ctx13(), 5, 2)

    def test_preimage_needs_invertible_shift(self):
        ctx = GroupContext(15, 4)
        with pytest.raises(ValueError):
            from_unit_group(ctx, 2, 6)  # gcd(6 - 1, 15) = 5
        with pytest.raises(ValueError):
            from_unit_group(ctx, 2, 0)
