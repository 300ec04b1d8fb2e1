"""Tests for the brute-force reference oracles."""

import pytest

from prothprime.oracle import brute_sqrt, is_prime_trial, mult_order

PRIMES_BELOW_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


class TestIsPrimeTrial:
    def test_primes_below_100(self):
        assert [n for n in range(100) if is_prime_trial(n)] == PRIMES_BELOW_100

    def test_matches_a_sieve(self):
        limit = 5000
        flags = bytearray([1]) * limit
        flags[0] = flags[1] = 0
        for p in range(2, int(limit**0.5) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        for n in range(limit):
            assert is_prime_trial(n) == bool(flags[n])

    def test_known_proth_values(self):
        assert is_prime_trial(13)
        assert is_prime_trial(65537)
        assert not is_prime_trial(33)
        assert not is_prime_trial(4033)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            is_prime_trial(2**64)
        with pytest.raises(ValueError):
            is_prime_trial(1.5)

    def test_small_edge_cases(self):
        assert not is_prime_trial(0)
        assert not is_prime_trial(1)
        assert not is_prime_trial(-7)
        assert is_prime_trial(2)


class TestBruteSqrt:
    def test_prime_modulus_examples(self):
        assert brute_sqrt(13, 3) == {4, 9}
        assert brute_sqrt(97, 2) == {14, 83}
        assert brute_sqrt(13, 5) == set()

    def test_composite_modulus_has_extra_roots(self):
        assert brute_sqrt(21, 4) == {2, 5, 16, 19}

    def test_value_is_reduced(self):
        assert brute_sqrt(13, 16) == brute_sqrt(13, 3)

    def test_zero_roots(self):
        assert brute_sqrt(9, 0) == {0, 3, 6}

    def test_members_square_back(self):
        for n in (13, 15, 21):
            for value in range(n):
                for x in brute_sqrt(n, value):
                    assert x * x % n == value

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            brute_sqrt(10**7 + 1, 2)
        with pytest.raises(ValueError):
            brute_sqrt(0, 2)


class TestMultOrder:
    def test_examples(self):
        assert mult_order(13, 2) == 12
        assert mult_order(13, 3) == 3
        assert mult_order(13, 12) == 2
        assert mult_order(13, 1) == 1

    def test_is_the_least_exponent(self):
        for p in (13, 17, 97):
            for a in range(1, p):
                order = mult_order(p, a)
                assert pow(a, order, p) == 1
                assert (p - 1) % order == 0
                assert all(pow(a, k, p) != 1 for k in range(1, order))

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            mult_order(15, 2)  # not prime
        with pytest.raises(ValueError):
            mult_order(13, 0)  # not a unit
        with pytest.raises(ValueError):
            mult_order(10**7 + 19, 2)  # over the scan budget
