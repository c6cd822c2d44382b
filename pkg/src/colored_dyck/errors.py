"""Exception hierarchy shared across the package."""


class ColoredDyckError(Exception):
    """Base class for all errors raised by this package."""


class NotDyck(ColoredDyckError):
    """The step text violates the prefix condition or is unbalanced."""


class BadAscent(ColoredDyckError):
    """A maximal ascent length is not divisible by a+b."""


class TruncatedDescent(ColoredDyckError):
    """Fewer down steps after an ascent than its block requires."""


class ColorOutOfRange(ColoredDyckError):
    """A color annotation exceeds the allowed count for its ascent size."""


class MalformedAnnotation(ColoredDyckError):
    """A color annotation is syntactically invalid or misplaced."""


class InvalidIndex(ColoredDyckError):
    """Index arguments outside the defined range (e.g. k > n)."""


class NonIntegerTerm(ColoredDyckError):
    """An exact-rational term failed its integrality assertion.

    This signals an implementation bug, never bad input: the formulas
    involved are integer-valued theorems.
    """


class InvalidTuple(ColoredDyckError):
    """A decomposition tuple violates its invariants."""


class EmptyWord(ColoredDyckError):
    """The empty word cannot be decomposed."""


class MalformedWord(ColoredDyckError):
    """A word failed structural validation during decomposition."""


class ResourceLimit(ColoredDyckError):
    """An enumeration exceeded its configured output cap."""
