"""Closed forms for the classical families recovered by the colored
Dyck model, each paired with its (params, colors) instantiation and,
where feasible, an independent lattice-path oracle.

Slope-3/2 words use the alphabet {a, b} with `a` an east step (1,0)
and `b` a north step (0,1); a word of length 5n runs from (0,0) to
(2n,3n) staying weakly below the line y = (3/2)x (checked as
2*y <= 3*x at every lattice point).  This side convention is pinned by
the regression test accepting the reference word "ababbaabbb".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, perm

from .bell import binomial, catalan
from .errors import InvalidIndex, NonIntegerTerm, ResourceLimit
from .model import ColorSequence, PathParams

__all__ = [
    "SequenceSpec",
    "PRESETS",
    "narayana",
    "motzkin_colored",
    "schroeder_little",
    "fuss_catalan",
    "fuss_catalan_peaks",
    "a052709_closed",
    "a186997_closed",
    "step_lattice_count",
    "duchon_d",
    "duchon_alt",
    "duchon_alt_mid",
    "duchon_alt_first",
    "rational_dyck_count",
    "rational_dyck_words",
    "is_slope32_word",
    "factor_free_count",
]


def _as_integer(x: Fraction, context: str) -> int:
    if x.denominator != 1:
        raise NonIntegerTerm(f"non-integer value in {context}: {x}")
    return x.numerator


def narayana(n: int, k: int) -> int:
    """The Narayana number (1/n) * C(n, k-1) * C(n, k)."""
    if not 1 <= k <= n:
        raise InvalidIndex(f"need 1 <= k <= n, got n={n}, k={k}")
    return _as_integer(
        Fraction(comb(n, k - 1) * comb(n, k), n), "narayana"
    )


def motzkin_colored(c1: int, c2: int, n: int) -> int:
    """Motzkin n-paths with c1-colored horizontal and c2-colored up
    steps: sum_k C(n, 2k) * C_k * c1^(n-2k) * c2^k."""
    if n < 0:
        raise ValueError("need n >= 0")
    return sum(
        comb(n, 2 * k) * catalan(k) * c1 ** (n - 2 * k) * c2**k
        for k in range(n // 2 + 1)
    )


def schroeder_little(n: int) -> int:
    """The n-th little Schroeder number, sum_k N(n,k) * 2^(n-k)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return sum(narayana(n, k) * 2 ** (n - k) for k in range(1, n + 1))


def fuss_catalan(m: int, n: int) -> int:
    """The Fuss-Catalan number (1/(m*n+1)) * C((m+1)*n, n)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return _as_integer(
        Fraction(comb((m + 1) * n, n), m * n + 1), "fuss_catalan"
    )


def fuss_catalan_peaks(m: int, n: int, k: int) -> int:
    """m-ary paths of length (m+1)n with exactly k peaks:
    (1/n) * C(m*n, k-1) * C(n, k)."""
    if not 1 <= k <= n:
        raise InvalidIndex(f"need 1 <= k <= n, got n={n}, k={k}")
    return _as_integer(
        Fraction(binomial(m * n, k - 1) * comb(n, k), n), "fuss_catalan_peaks"
    )


def a052709_closed(n: int) -> int:
    """Paths from (0,0) to (2n,0) with steps (1,1), (1,-1), (3,1):
    sum over k of (1/k) * C(2k, k-1) * C(k, n-k)."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for k in range((n + 1) // 2, n + 1):
        total += Fraction(binomial(2 * k, k - 1) * binomial(k, n - k), k)
    return _as_integer(total, "a052709")


def a186997_closed(n: int) -> int:
    """Paths from (0,0) to (3n,0) with steps (1,2), (1,-1), (3,3):
    sum over k of (1/k) * C(n+2k, k-1) * C(k, n-k)."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for k in range((n + 1) // 2, n + 1):
        total += Fraction(binomial(n + 2 * k, k - 1) * binomial(k, n - k), k)
    return _as_integer(total, "a186997")


def step_lattice_count(steps, end_x: int) -> int:
    """First-quadrant paths from (0,0) to (end_x, 0) over the given
    step set, with y >= 0 checked at every step endpoint.

    Generic DP oracle for the closed forms above (and, with the unit
    step sets, for Dyck and Motzkin paths).
    """
    if end_x < 0:
        raise ValueError("need end_x >= 0")
    steps = sorted(set(steps))
    if any(dx < 1 for dx, _ in steps):
        raise ValueError("steps must advance in x")
    # reach[x] maps height y to the number of paths ending at (x, y)
    reach = [dict() for _ in range(end_x + 1)]
    reach[0][0] = 1
    for x in range(end_x):
        for y, count in reach[x].items():
            for dx, dy in steps:
                nx, ny = x + dx, y + dy
                if nx <= end_x and ny >= 0:
                    reach[nx][ny] = reach[nx].get(ny, 0) + count
    return reach[end_x].get(0, 0)


def duchon_d(n: int) -> int:
    """Duchon's count of slope-3/2 Dyck words of length 5n:
    sum_j (1/(5n+j+1)) * C(5n+1, n-j) * C(5n+2j, j)."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for j in range(n + 1):
        total += Fraction(
            comb(5 * n + 1, n - j) * comb(5 * n + 2 * j, j), 5 * n + j + 1
        )
    return _as_integer(total, "duchon_d")


def duchon_alt_first(n: int) -> int:
    """First rewriting of duchon_d, with a falling-factorial kernel:
    sum_k C(5n, k-1) sum_j ((-1)^(k-j)/k) C(k,j) (2j-k) (2j-k+2n-1)_(n-1) / n!."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for k in range(1, n + 1):
        inner = Fraction(0)
        for j in range(k + 1):
            inner += (
                Fraction((-1) ** (k - j), k)
                * comb(k, j)
                * (2 * j - k)
                * perm(2 * j - k + 2 * n - 1, n - 1)
            )
        total += comb(5 * n, k - 1) * inner / factorial(n)
    return _as_integer(total, "duchon_alt_first")


def duchon_alt_mid(n: int) -> int:
    """Second rewriting, with a binomial kernel:
    sum_k C(5n, k-1) sum_j ((-1)^(k-j)/(n*k)) C(k,j) (2j-k) C(2j-k+2n-1, n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for k in range(1, n + 1):
        for j in range(k + 1):
            total += (
                comb(5 * n, k - 1)
                * Fraction((-1) ** (k - j), n * k)
                * comb(k, j)
                * (2 * j - k)
                * binomial(2 * j - k + 2 * n - 1, n - 1)
            )
    return _as_integer(total, "duchon_alt_mid")


def duchon_alt(n: int) -> int:
    """Final rewriting:
    sum_k C(5n, k-1) sum_j ((-1)^j/n) [C(k-1,j) - C(k-1,j-1)] C(2n+k-2j-1, n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    total = Fraction(0)
    for k in range(1, n + 1):
        for j in range(k + 1):
            total += (
                comb(5 * n, k - 1)
                * Fraction((-1) ** j, n)
                * (binomial(k - 1, j) - binomial(k - 1, j - 1))
                * binomial(2 * n + k - 2 * j - 1, n - 1)
            )
    return _as_integer(total, "duchon_alt")


def _slope32_ok(x: int, y: int) -> bool:
    return 2 * y <= 3 * x


def rational_dyck_count(n: int) -> int:
    """Number of slope-3/2 Dyck words of length 5n, by grid DP."""
    if n < 1:
        raise ValueError("need n >= 1")
    width, height = 2 * n, 3 * n
    counts = [[0] * (height + 1) for _ in range(width + 1)]
    counts[0][0] = 1
    for x in range(width + 1):
        for y in range(height + 1):
            c = counts[x][y]
            if not c:
                continue
            if x + 1 <= width:
                counts[x + 1][y] += c
            if y + 1 <= height and _slope32_ok(x, y + 1):
                counts[x][y + 1] += c
    return counts[width][height]


def rational_dyck_words(n: int, cap: int = 10**6):
    """All slope-3/2 Dyck words of length 5n, as strings over {a, b},
    in lexicographic order."""
    if n < 1:
        raise ValueError("need n >= 1")
    width, height = 2 * n, 3 * n
    out = []

    def walk(x, y, prefix):
        if x == width and y == height:
            out.append("".join(prefix))
            if len(out) > cap:
                raise ResourceLimit(f"more than {cap} words")
            return
        if x + 1 <= width:
            prefix.append("a")
            walk(x + 1, y, prefix)
            prefix.pop()
        if y + 1 <= height and _slope32_ok(x, y + 1):
            prefix.append("b")
            walk(x, y + 1, prefix)
            prefix.pop()

    walk(0, 0, [])
    return out


def is_slope32_word(word: str) -> bool:
    """Membership in the slope-3/2 Dyck language: length 5m with 2m
    east and 3m north steps, staying weakly below y = (3/2)x."""
    if not word or len(word) % 5 != 0 or set(word) - {"a", "b"}:
        return False
    m = len(word) // 5
    if word.count("a") != 2 * m:
        return False
    x = y = 0
    for letter in word:
        if letter == "a":
            x += 1
        else:
            y += 1
        if not _slope32_ok(x, y):
            return False
    return True


def factor_free_count(n: int, cap: int = 10**6) -> int:
    """Slope-3/2 words of length 5n with no proper contiguous factor
    in the language.  Exhaustive; intended for small n only."""
    words = rational_dyck_words(n, cap=cap)
    count = 0
    for word in words:
        length = len(word)
        has_factor = any(
            is_slope32_word(word[i : i + size])
            for size in range(5, length, 5)
            for i in range(length - size + 1)
        )
        if not has_factor:
            count += 1
    return count


@dataclass(frozen=True)
class SequenceSpec:
    """A named family: its closed form together with the (params,
    colors) pair whose colored-path counts it must match."""

    name: str
    params: PathParams
    colors: ColorSequence
    closed_form: object


def _make_presets():
    specs = [
        SequenceSpec(
            "narayana", PathParams(1, 0), ColorSequence.ones(), narayana
        ),
        SequenceSpec(
            "motzkin",
            PathParams(1, 0),
            ColorSequence.explicit((1, 1)),
            lambda n: motzkin_colored(1, 1, n),
        ),
        SequenceSpec(
            "schroeder",
            PathParams(1, 0),
            ColorSequence.powers_of_two(),
            schroeder_little,
        ),
        SequenceSpec(
            "mary",
            PathParams(2, 0),
            ColorSequence.ones(),
            lambda n, m=2: fuss_catalan(m, n),
        ),
        SequenceSpec(
            "a052709",
            PathParams(0, 2),
            ColorSequence.explicit((1, 1)),
            a052709_closed,
        ),
        SequenceSpec(
            "a186997",
            PathParams(1, 2),
            ColorSequence.explicit((1, 1)),
            a186997_closed,
        ),
        SequenceSpec(
            "duchon",
            PathParams(5, 0),
            ColorSequence.catalan_pair_sum(),
            duchon_d,
        ),
    ]
    return {s.name: s for s in specs}


PRESETS = _make_presets()
