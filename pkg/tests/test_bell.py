import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colored_dyck import (
    ColorSequence,
    binomial,
    catalan,
    factorial,
    partial_bell_rec,
    partial_bell_sum,
    scaled_colors,
)
from colored_dyck.bell import partitions_into_parts
from colored_dyck.errors import InvalidIndex


def bell_or_base(n, k, x):
    """B_{n,k} extended to the k = 0 and k > n boundary cases."""
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    return partial_bell_rec(n, k, x)


class TestPrimitives:
    def test_factorial(self):
        assert factorial(0) == 1
        assert factorial(1) == 1
        assert factorial(6) == 720

    def test_binomial(self):
        assert binomial(5, 0) == 1
        assert binomial(5, -1) == 0
        assert binomial(6, 2) == 15
        assert binomial(3, 7) == 0

    def test_catalan(self):
        assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    def test_catalan_matches_binomial_quotient(self):
        for n in range(20):
            assert catalan(n) * (n + 1) == math.comb(2 * n, n)


class TestPartitions:
    def test_counts_match_partition_numbers(self):
        # partitions of n into exactly k parts
        def by_force(n, k):
            def rec(remaining, parts, largest):
                if parts == 0:
                    return 1 if remaining == 0 else 0
                return sum(
                    rec(remaining - p, parts - 1, p)
                    for p in range(1, min(largest, remaining) + 1)
                )

            return rec(n, k, n)

        for n in range(1, 12):
            for k in range(1, n + 1):
                alphas = list(partitions_into_parts(n, k))
                assert len(alphas) == by_force(n, k)
                for alpha in alphas:
                    assert sum(alpha) == k
                    assert sum(i * a for i, a in enumerate(alpha, 1)) == n

    def test_deterministic_order(self):
        first = list(partitions_into_parts(9, 4))
        second = list(partitions_into_parts(9, 4))
        assert first == second
        assert len(set(first)) == len(first)


class TestBellEvaluators:
    def test_single_part(self):
        x = (3, 1, 4, 1, 5, 9)
        for n in range(1, 7):
            assert partial_bell_sum(n, 1, x) == x[n - 1]

    def test_two_parts_of_three(self):
        # only alpha = (1, 1): coefficient 3!/(1! 1! 2!) = 3
        assert partial_bell_sum(3, 2, (5, 7)) == 3 * 5 * 7

    def test_rec_base(self):
        assert partial_bell_rec(1, 1, (9,)) == 9
        assert partial_bell_rec(4, 4, (2,)) == 16

    def test_invalid_index(self):
        with pytest.raises(InvalidIndex):
            partial_bell_sum(3, 4, (1, 1, 1))
        with pytest.raises(InvalidIndex):
            partial_bell_rec(3, 0, (1, 1, 1))

    def test_factorial_arguments_give_lah_like_values(self):
        # B_{n,k}(1!, 2!, 3!, ...) = (n!/k!) * C(n-1, k-1)
        for n in range(1, 9):
            x = tuple(math.factorial(i) for i in range(1, n + 1))
            for k in range(1, n + 1):
                expected = math.factorial(n) // math.factorial(k) * math.comb(
                    n - 1, k - 1
                )
                assert partial_bell_sum(n, k, x) == expected
                assert partial_bell_rec(n, k, x) == expected

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 10),
        st.data(),
    )
    def test_methods_agree(self, n, data):
        k = data.draw(st.integers(1, n))
        x = tuple(
            data.draw(st.integers(-6, 6)) for _ in range(n - k + 1)
        )
        assert partial_bell_sum(n, k, x) == partial_bell_rec(n, k, x)

    def test_homogeneity(self):
        rng = random.Random(7)
        for t in (2, 3):
            for n in range(1, 9):
                x = tuple(rng.randint(0, 5) for _ in range(n))
                for k in range(1, n + 1):
                    base = partial_bell_sum(n, k, x)
                    scaled_lin = tuple(t * v for v in x)
                    scaled_geo = tuple(
                        t**i * v for i, v in enumerate(x, 1)
                    )
                    assert partial_bell_sum(n, k, scaled_lin) == t**k * base
                    assert partial_bell_sum(n, k, scaled_geo) == t**n * base

    def test_support_vanishes_without_usable_parts(self):
        # only parts 1 and 2 available: B_{n,k} = 0 for k < ceil(n/2)
        for n in range(1, 11):
            x = (1, 4) + (0,) * max(0, n - 2)
            for k in range(1, n + 1):
                value = partial_bell_sum(n, k, x)
                if k < (n + 1) // 2:
                    assert value == 0
                else:
                    assert value == partial_bell_rec(n, k, x)


class TestConvolutionIdentities:
    """The two summation identities used to telescope the recurrence."""

    def _random_scaled(self, rng, n):
        c = [rng.randint(0, 4) for _ in range(n)]
        return c, tuple(math.factorial(i) * c[i - 1] for i in range(1, n + 1))

    def test_identity_a(self):
        rng = random.Random(11)
        a = 3
        for n in range(1, 9):
            c, x = self._random_scaled(rng, n)
            for k in range(1, n + 1):
                lhs = sum(
                    a
                    * n
                    * math.comb(n - 1, ell)
                    * math.factorial(n - ell)
                    * c[n - ell - 1]
                    * bell_or_base(ell, k - 1, x)
                    for ell in range(k - 1, n)
                )
                assert lhs == a * n * partial_bell_sum(n, k, x)

    def test_identity_b(self):
        rng = random.Random(13)
        b = 2
        for n in range(1, 9):
            c, x = self._random_scaled(rng, n)
            for k in range(1, n + 1):
                lhs = sum(
                    b
                    * math.comb(n, ell)
                    * math.factorial(n - ell)
                    * c[n - ell - 1]
                    * bell_or_base(ell, k - 1, x)
                    for ell in range(k - 1, n)
                )
                assert lhs == b * k * partial_bell_sum(n, k, x)


class TestScaledColors:
    def test_ones(self):
        assert scaled_colors(ColorSequence.ones(), 3) == (1, 2, 6)

    def test_powers_of_two(self):
        assert scaled_colors(ColorSequence.powers_of_two(), 3) == (1, 4, 24)

    def test_explicit_tail_zero(self):
        assert scaled_colors(ColorSequence.explicit((1, 1)), 4) == (1, 2, 0, 0)
