import pytest

from colored_dyck import ColorSequence, PathParams

# (a, b) grid used by the cross-route and enumeration checks.
PARAM_GRID = [
    PathParams(a, b)
    for a in range(4)
    for b in range(4)
    if a + b >= 1
]

COLOR_GRID = [
    ColorSequence.ones(),
    ColorSequence.powers_of_two(),
    ColorSequence.catalan_pair_sum(),
    ColorSequence.explicit((1, 1)),
    ColorSequence.explicit((2, 0, 1)),
    ColorSequence.constant(3),
]


@pytest.fixture(params=PARAM_GRID, ids=lambda p: f"a{p.a}b{p.b}")
def params(request):
    return request.param


@pytest.fixture(params=COLOR_GRID, ids=lambda c: c.kind)
def colors(request):
    return request.param
