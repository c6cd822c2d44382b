"""Exact counting, generation, and decomposition of colored Dyck paths."""

from .bell import (
    binomial,
    catalan,
    factorial,
    partial_bell_rec,
    partial_bell_sum,
    scaled_colors,
)
from .bijection import (
    DecompositionTuple,
    compose,
    decompose,
    enumerate_all,
    weak_compositions,
)
from .counting import (
    CountSeries,
    PeakTable,
    convolution_power_closed,
    convolution_power_direct,
    count_bell,
    count_recurrence,
    peak_table,
)
from .model import (
    DOWN,
    ColoredDyckWord,
    ColorSequence,
    DownStep,
    PathParams,
    Rise,
    color_at,
    parse_steps,
    peaks,
    semilength,
    to_steps,
    validate_colors,
)
from . import errors, sequences

__version__ = "0.1.0"
