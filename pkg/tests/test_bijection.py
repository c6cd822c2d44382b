import pytest

from colored_dyck import (
    DOWN,
    ColoredDyckWord,
    ColorSequence,
    DecompositionTuple,
    PathParams,
    Rise,
    compose,
    decompose,
    enumerate_all,
    parse_steps,
    peaks,
    to_steps,
)
from colored_dyck.bijection import weak_compositions
from colored_dyck.errors import EmptyWord, InvalidTuple, ResourceLimit


ONES = ColorSequence.ones()


class TestWeakCompositions:
    def test_lexicographic(self):
        assert list(weak_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]

    def test_counts(self):
        from math import comb

        for total in range(6):
            for parts in range(1, 5):
                got = list(weak_compositions(total, parts))
                assert len(got) == comb(total + parts - 1, parts - 1)
                assert got == sorted(got)


class TestCompose:
    def test_minimal_word(self):
        t = DecompositionTuple(1, 1, (ColoredDyckWord(PathParams(1, 0), ()),))
        w = compose(t, PathParams(1, 0), ONES)
        assert to_steps(w) == "u[1]d"

    def test_with_nonempty_child(self):
        params = PathParams(1, 0)
        child = parse_steps("ud", params, ONES)
        t = DecompositionTuple(2, 1, (ColoredDyckWord(params, ()), child))
        w = compose(t, params, ONES)
        assert w.blocks == (Rise(2, 1), DOWN, Rise(1, 1))
        assert to_steps(w) == "uu[1]ddu[1]d"

    def test_figure_like_shape(self):
        # a=5, b=0, ell=1: five children, one empty in the middle
        params = PathParams(5, 0)
        colors = ColorSequence.ones()
        empty = ColoredDyckWord(params, ())
        child = compose(
            DecompositionTuple(1, 1, (empty,) * 5), params, colors
        )
        t = DecompositionTuple(
            1, 1, (child, empty, empty, child, empty)
        )
        w = compose(t, params, colors)
        text = to_steps(w).replace("[1]", "")
        assert text.startswith("u" * 5 + "d")
        assert decompose(w, params, colors) == t

    def test_wrong_child_count(self):
        with pytest.raises(InvalidTuple):
            compose(
                DecompositionTuple(1, 1, ()), PathParams(1, 0), ONES
            )

    def test_color_out_of_range(self):
        empty = ColoredDyckWord(PathParams(1, 0), ())
        with pytest.raises(InvalidTuple):
            compose(
                DecompositionTuple(1, 2, (empty,)), PathParams(1, 0), ONES
            )


class TestDecompose:
    def test_minimal(self):
        params = PathParams(1, 0)
        t = decompose(parse_steps("ud", params, ONES), params, ONES)
        assert (t.ell, t.color) == (1, 1)
        assert t.children == (ColoredDyckWord(params, ()),)

    def test_semilength_two_words(self):
        params = PathParams(1, 0)
        t = decompose(parse_steps("udud", params, ONES), params, ONES)
        assert t.ell == 1
        assert to_steps(t.children[0]) == "u[1]d"
        t = decompose(parse_steps("uudd", params, ONES), params, ONES)
        assert t.ell == 2
        assert t.children == (
            ColoredDyckWord(params, ()),
            ColoredDyckWord(params, ()),
        )

    def test_empty_word_rejected(self):
        params = PathParams(1, 0)
        with pytest.raises(EmptyWord):
            decompose(ColoredDyckWord(params, ()), params, ONES)

    def test_excess_bookkeeping(self, params):
        # after the head block, each child closes with one separator,
        # so the child count always equals a*ell + b
        colors = ColorSequence.constant(2)
        for n in range(1, 7 // params.period + 1):
            for w in enumerate_all(params, colors, n):
                t = decompose(w, params, colors)
                assert len(t.children) == params.a * t.ell + params.b
                assert sum(c.n for c in t.children) == w.n - t.ell


class TestEnumeration:
    def test_index_zero(self):
        words = enumerate_all(PathParams(1, 0), ONES, 0)
        assert words == (ColoredDyckWord(PathParams(1, 0), ()),)

    def test_narayana_histogram(self):
        from collections import Counter

        words = enumerate_all(PathParams(1, 0), ONES, 3)
        assert len(words) == 5
        histogram = Counter(peaks(w) for w in words)
        assert [histogram[k] for k in (1, 2, 3)] == [1, 3, 1]

    def test_a052709_words(self):
        params = PathParams(0, 2)
        colors = ColorSequence.explicit((1, 1))
        words = enumerate_all(params, colors, 2)
        texts = sorted(to_steps(w).replace("[1]", "") for w in words)
        assert texts == ["uudduudd", "uuduuddd", "uuuudddd"]

    def test_deterministic_order(self, params, colors):
        n = min(3, 7 // params.period)
        first = enumerate_all(params, colors, n)
        second = enumerate_all(params, colors, n)
        assert first == second

    def test_no_duplicates(self, params, colors):
        for n in range(7 // params.period + 1):
            words = enumerate_all(params, colors, n)
            assert len(set(words)) == len(words)

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            enumerate_all(PathParams(1, 0), ONES, 6, cap=10)


class TestRoundTrips:
    def test_word_tuple_word(self, params, colors):
        for n in range(1, 7 // params.period + 1):
            for w in enumerate_all(params, colors, n):
                t = decompose(w, params, colors)
                assert compose(t, params, colors) == w

    def test_tuple_word_tuple(self, params, colors):
        a, b = params.a, params.b
        n_max = 7 // params.period
        for ell in range(1, n_max + 1):
            for color in range(1, colors.at(ell) + 1):
                r = a * ell + b
                for rest in weak_compositions(n_max - ell, r):
                    children = tuple(
                        enumerate_all(params, colors, i)[0] for i in rest
                    )
                    t = DecompositionTuple(ell, color, children)
                    assert decompose(
                        compose(t, params, colors), params, colors
                    ) == t
