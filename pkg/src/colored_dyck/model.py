"""Domain types for colored Dyck words built from blocks.

A word is stored as a sequence of blocks: ``DownStep`` is a lone down
step ``d`` and ``Rise(j, color)`` expands to ``(a+b)*j`` up steps
followed by ``b*(j-1)+1`` down steps, with the ascent carrying one of
``c_j`` colors.  Step text is a serialization only; the block sequence
is the unique parse of its own expansion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb

from .errors import (
    BadAscent,
    ColorOutOfRange,
    MalformedAnnotation,
    NotDyck,
    TruncatedDescent,
)

__all__ = [
    "PathParams",
    "ColorSequence",
    "DownStep",
    "Rise",
    "DOWN",
    "ColoredDyckWord",
    "color_at",
    "to_steps",
    "parse_steps",
    "peaks",
    "semilength",
    "validate_colors",
]


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class PathParams:
    """The pair (a, b) governing block shapes: ascents have length
    (a+b)*j and each Rise block ends with b*(j-1)+1 down steps."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be nonnegative")
        if self.a + self.b < 1:
            raise ValueError("a + b must be at least 1")

    @property
    def period(self) -> int:
        """Ascent length unit a+b."""
        return self.a + self.b

    def descent_run(self, j: int) -> int:
        """Number of down steps attached to a size-j rise block."""
        return self.b * (j - 1) + 1


@dataclass(frozen=True)
class ColorSequence:
    """Coloring multiplicities c_1, c_2, ... given by a preset rule or
    an explicit prefix with a constant tail.

    A tail of 0 in an explicit sequence forbids all larger ascents.
    """

    kind: str
    prefix: tuple[int, ...] = ()
    tail: int = 0

    _KINDS = ("explicit", "ones", "pow2", "catpair", "const")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown color sequence kind: {self.kind!r}")
        if any(c < 0 for c in self.prefix) or self.tail < 0:
            raise ValueError("color counts must be nonnegative")

    @classmethod
    def ones(cls) -> "ColorSequence":
        return cls("ones")

    @classmethod
    def powers_of_two(cls) -> "ColorSequence":
        """c_j = 2^(j-1), the little-Schroeder coloring."""
        return cls("pow2")

    @classmethod
    def catalan_pair_sum(cls) -> "ColorSequence":
        """c_j = C_{j-1} + C_j with C the Catalan numbers."""
        return cls("catpair")

    @classmethod
    def constant(cls, v: int) -> "ColorSequence":
        return cls("const", tail=v)

    @classmethod
    def explicit(cls, prefix, tail: int = 0) -> "ColorSequence":
        return cls("explicit", prefix=tuple(prefix), tail=tail)

    def at(self, j: int) -> int:
        """Evaluate c_j for j >= 1."""
        if j < 1:
            raise ValueError("color index must be positive")
        if self.kind == "ones":
            return 1
        if self.kind == "pow2":
            return 2 ** (j - 1)
        if self.kind == "catpair":
            return _catalan(j - 1) + _catalan(j)
        if self.kind == "const":
            return self.tail
        if j <= len(self.prefix):
            return self.prefix[j - 1]
        return self.tail


def color_at(colors: ColorSequence, j: int) -> int:
    """Evaluate the coloring rule at position j >= 1."""
    return colors.at(j)


@dataclass(frozen=True)
class DownStep:
    """The block P_0, a single down step."""

    def __repr__(self):
        return "DownStep()"


@dataclass(frozen=True)
class Rise:
    """An ascent block of size j: (a+b)*j up steps, then b*(j-1)+1 down
    steps, with the ascent colored by a 1-based color index."""

    j: int
    color: int = 1

    def __post_init__(self):
        if self.j < 1:
            raise ValueError("rise size must be positive")
        if self.color < 1:
            raise ValueError("color index must be positive")


DOWN = DownStep()

Block = DownStep | Rise


@dataclass(frozen=True)
class ColoredDyckWord:
    """A colored Dyck word as an ordered block sequence.

    Construction checks the structural invariants: the step expansion
    is a balanced Dyck word and the total up-step count is a multiple
    of a+b.  Color-range checks against a ColorSequence are separate
    (validate_colors), so that externally supplied words report
    ColorOutOfRange during decomposition rather than construction.
    """

    params: PathParams
    blocks: tuple[Block, ...]
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        p = self.params
        balance = 0
        ups = 0
        for block in self.blocks:
            if isinstance(block, Rise):
                balance += p.period * block.j
                ups += p.period * block.j
                balance -= p.descent_run(block.j)
            else:
                balance -= 1
            if balance < 0:
                raise NotDyck("prefix has more d's than u's")
        if balance != 0:
            raise NotDyck("unbalanced word")
        object.__setattr__(self, "n", ups // p.period)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


def peaks(word: ColoredDyckWord) -> int:
    """Number of peaks = number of maximal ascents = Rise blocks."""
    return sum(1 for b in word.blocks if isinstance(b, Rise))


def semilength(word: ColoredDyckWord) -> int:
    """Number of up steps in the expansion, (a+b)*n."""
    return word.params.period * word.n


def validate_colors(word: ColoredDyckWord, colors: ColorSequence) -> None:
    """Check every Rise block's color against the coloring rule."""
    for block in word.blocks:
        if isinstance(block, Rise):
            limit = colors.at(block.j)
            if not 1 <= block.color <= limit:
                raise ColorOutOfRange(
                    f"color {block.color} out of range for ascent size "
                    f"{block.j} (c_{block.j} = {limit})"
                )


def to_steps(word: ColoredDyckWord) -> str:
    """Serialize to step text over {u, d}.

    The color annotation "[k]" sits at the ascent/descent boundary of
    each Rise block and is always emitted.
    """
    p = word.params
    parts = []
    for block in word.blocks:
        if isinstance(block, Rise):
            parts.append("u" * (p.period * block.j))
            parts.append(f"[{block.color}]")
            parts.append("d" * p.descent_run(block.j))
        else:
            parts.append("d")
    return "".join(parts)


_TOKEN = re.compile(r"u+|d+|\[\d+\]|.", re.DOTALL)


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if tok[0] in "ud":
            tokens.append((tok[0], len(tok)))
        elif tok.startswith("["):
            tokens.append(("color", int(tok[1:-1])))
        else:
            raise MalformedAnnotation(f"unexpected character {tok!r}")
    return tokens


def parse_steps(text: str, params: PathParams, colors: ColorSequence) -> ColoredDyckWord:
    """Parse step text into its unique block sequence.

    The parse is forced: every maximal ascent of length L needs
    (a+b) | L, the next b*(j-1)+1 down steps belong to that Rise block,
    and the remaining down steps before the next ascent are DownStep
    blocks.  An absent annotation means color 1.
    """
    tokens = _tokenize(text.strip())

    # Dyck property on the bare letters, before any grammar checks.
    balance = 0
    for kind, value in tokens:
        if kind == "u":
            balance += value
        elif kind == "d":
            balance -= value
            if balance < 0:
                raise NotDyck("prefix has more d's than u's")
    if balance != 0:
        raise NotDyck("unbalanced word")

    p = params
    blocks: list[Block] = []
    i = 0
    while i < len(tokens):
        kind, value = tokens[i]
        if kind == "color":
            raise MalformedAnnotation("annotation not at an ascent/descent boundary")
        if kind == "d":
            blocks.extend([DOWN] * value)
            i += 1
            continue
        # Maximal ascent of length `value`.
        if value % p.period != 0:
            raise BadAscent(
                f"ascent length {value} not divisible by a+b = {p.period}"
            )
        j = value // p.period
        i += 1
        color = None
        if i < len(tokens) and tokens[i][0] == "color":
            color = tokens[i][1]
            if color < 1:
                raise MalformedAnnotation("color annotation must be positive")
            i += 1
        need = p.descent_run(j)
        if i >= len(tokens) or tokens[i][0] != "d" or tokens[i][1] < need:
            raise TruncatedDescent(
                f"ascent of size {j} requires {need} following down steps"
            )
        extra = tokens[i][1] - need
        i += 1
        # Tolerated input variant: annotation directly after the block's
        # descent run instead of at the ascent/descent boundary.
        if (
            color is None
            and extra == 0
            and i < len(tokens)
            and tokens[i][0] == "color"
        ):
            color = tokens[i][1]
            if color < 1:
                raise MalformedAnnotation("color annotation must be positive")
            i += 1
        if color is None:
            color = 1
        limit = colors.at(j)
        if not 1 <= color <= limit:
            raise ColorOutOfRange(
                f"color {color} out of range for ascent size {j} (c_{j} = {limit})"
            )
        blocks.append(Rise(j, color))
        blocks.extend([DOWN] * extra)

    return ColoredDyckWord(params, tuple(blocks))
