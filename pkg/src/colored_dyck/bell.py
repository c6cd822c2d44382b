"""Exact big-integer combinatorial primitives.

Two independent evaluators are provided for partial Bell polynomials:
the partition sum (partial_bell_sum) and the standard recurrence
(partial_bell_rec).  Each serves as the oracle for the other.
"""

from __future__ import annotations

import math

from .errors import InvalidIndex
from .model import ColorSequence

__all__ = [
    "factorial",
    "binomial",
    "catalan",
    "partitions_into_parts",
    "partial_bell_sum",
    "partial_bell_rec",
    "scaled_colors",
]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def binomial(m: int, r: int) -> int:
    """C(m, r), with the convention C(m, r) = 0 for r < 0 or r > m."""
    if m < 0:
        raise ValueError("binomial requires a nonnegative top argument")
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def partitions_into_parts(n: int, k: int):
    """Yield multiplicity vectors alpha of length n-k+1 with
    sum(alpha) = k and sum(i * alpha_i) = n.

    Order is colexicographic over part multiplicities (largest part
    chosen first), fixed so that outputs are deterministic.
    """
    length = n - k + 1

    def rec(remaining, parts_left, max_part):
        if parts_left == 0:
            if remaining == 0:
                yield []
            return
        # Largest usable part: cannot exceed max_part, and must leave
        # room for the other parts (each at least 1).
        top = min(max_part, remaining - (parts_left - 1))
        for part in range(top, 0, -1):
            # All further parts are <= part, so remaining - part must
            # be coverable: parts_left - 1 <= remaining - part.
            for rest in rec(remaining - part, parts_left - 1, part):
                yield [part] + rest

    for partition in rec(n, k, length):
        alpha = [0] * length
        for part in partition:
            alpha[part - 1] += 1
        yield tuple(alpha)


def _check_bell_args(n, k, x):
    if k < 1 or k > n:
        raise InvalidIndex(f"need 1 <= k <= n, got n={n}, k={k}")
    if len(x) < n - k + 1:
        raise InvalidIndex(
            f"need at least n-k+1 = {n - k + 1} arguments, got {len(x)}"
        )


def partial_bell_sum(n: int, k: int, x) -> int:
    """B_{n,k}(x_1, ..., x_{n-k+1}) by the partition sum.

    Each monomial's coefficient n! / (prod alpha_i! * prod (i!)^alpha_i)
    is a multinomial and therefore an exact integer; the division is
    performed in integer arithmetic.
    """
    _check_bell_args(n, k, x)
    total = 0
    n_fact = math.factorial(n)
    for alpha in partitions_into_parts(n, k):
        denom = 1
        monomial = 1
        for i, a in enumerate(alpha, start=1):
            if a == 0:
                continue
            denom *= math.factorial(a) * math.factorial(i) ** a
            monomial *= x[i - 1] ** a
        coeff, rem = divmod(n_fact, denom)
        assert rem == 0
        total += coeff * monomial
    return total


def partial_bell_rec(n: int, k: int, x) -> int:
    """B_{n,k} via the recurrence
    B_{n,k} = sum_j C(n-1, j-1) * x_j * B_{n-j, k-1}, B_{0,0} = 1.

    Independent of partial_bell_sum; used as a cross-check oracle.
    """
    _check_bell_args(n, k, x)
    memo = {}

    def bell(m, q):
        if q == 0:
            return 1 if m == 0 else 0
        if m < q:
            return 0
        key = (m, q)
        if key not in memo:
            memo[key] = sum(
                math.comb(m - 1, j - 1) * x[j - 1] * bell(m - j, q - 1)
                for j in range(1, min(m - q + 1, len(x)) + 1)
            )
        return memo[key]

    return bell(n, k)


def scaled_colors(colors: ColorSequence, n: int):
    """The argument sequence (1!*c_1, 2!*c_2, ..., n!*c_n) fed to the
    Bell polynomials in the counting formulas."""
    if n < 1:
        raise ValueError("need n >= 1")
    return tuple(math.factorial(j) * colors.at(j) for j in range(1, n + 1))
