from hypothesis import given, strategies as st

import pytest

from yfgraph.infinite import Geometric, RunWord
from yfgraph.words import (
    EPSILON,
    Word,
    WordError,
    clocks,
    common_suffix_len,
    common_suffix_rank,
    concat,
    down_neighbors,
    enumerate_level,
    fibonacci,
    g,
    g_prime,
    iter_levels,
    runs,
    splits,
    twos,
    up_neighbors,
    word,
)

words_st = st.lists(st.sampled_from([1, 2]), max_size=12).map(lambda d: Word.from_digits(d))


def ws(*texts):
    return frozenset(word(t) for t in texts)


class TestParsing:
    def test_round_trip(self):
        for text in ["1", "2", "21221", "1111", "212"]:
            assert str(word(text)) == text

    def test_empty_forms(self):
        assert word("") == EPSILON
        assert word("e") == EPSILON
        assert EPSILON.label == "e"
        assert str(EPSILON) == ""

    @pytest.mark.parametrize("bad", ["3", "12a", "0", "ee", "1 2"])
    def test_rejects(self, bad):
        with pytest.raises(WordError):
            word(bad)

    def test_storage_is_right_to_left(self):
        assert word("21").rev == (1, 2)
        assert word("21").digits == (2, 1)


def test_rank_examples():
    assert EPSILON.rank == 0
    assert word("21221").rank == 8
    assert word("1111").rank == 4


def test_up_neighbors_examples():
    assert up_neighbors(EPSILON) == ws("1")
    assert up_neighbors(word("1")) == ws("2", "11")
    assert up_neighbors(word("21")) == ws("22", "121", "211")


def test_down_neighbors_examples():
    assert down_neighbors(word("2221")) == ws("1221", "2121", "2211", "222")
    assert down_neighbors(word("2222")) == ws("1222", "2122", "2212", "2221")
    assert down_neighbors(word("1")) == ws("e")
    assert down_neighbors(EPSILON) == frozenset()


def test_enumerate_level_examples():
    assert enumerate_level(0) == [EPSILON]
    assert set(enumerate_level(2)) == ws("11", "2")
    assert [str(v) for v in enumerate_level(4)] == ["1111", "211", "121", "112", "22"]


def test_level_order_is_sorted():
    for n in range(12):
        level = enumerate_level(n)
        assert level == sorted(level)
        assert len(set(level)) == len(level)
        assert all(v.rank == n for v in level)


def test_level_sizes_are_fibonacci():
    for n in range(21):
        assert len(enumerate_level(n)) == fibonacci(n + 1)


def test_iter_levels():
    assert sum(1 for _ in iter_levels(6)) == sum(fibonacci(n + 1) for n in range(7))


def test_suffix_statistics_examples():
    assert common_suffix_len(word("21221"), word("21221")) == 5
    assert common_suffix_len(word("1"), word("21")) == 1
    assert common_suffix_len(word("2"), word("1")) == 0
    # common suffix 1221 has digit sum 6
    assert common_suffix_rank(word("21221"), word("1221")) == 6
    assert common_suffix_rank(word("2"), word("1")) == 0


def test_clock_examples():
    x = word("21221")
    assert [g(x, k) for k in (1, 2, 3)] == [2, 4, 7]
    assert g(word("2"), 1) == 1
    assert g(word("22"), 2) == 3
    assert g_prime(x, 1) == 2
    assert g_prime(word("2"), 1) == 1
    assert g_prime(word("22"), 2) == 1


def test_clock_index_range():
    with pytest.raises(IndexError):
        g(word("21"), 2)
    with pytest.raises(IndexError):
        g(word("21"), 0)


def test_clock_on_infinite_word():
    w = RunWord(Geometric(1))
    assert [g(w, k) for k in range(1, 6)] == [2 ** k + 2 * k - 2 for k in range(1, 6)]


def test_concat_examples():
    assert concat(word("2"), word("1221")) == word("21221")
    assert concat(word("212"), EPSILON) == word("212")
    assert concat(twos(3), word("11")) == word("22211")


def test_runs_example():
    r = runs(word("21221"))
    assert r.betas == (1, 0, 1)
    assert r.leading_ones == 0
    assert r.assemble() == word("21221")


def test_adjacency_duality_exhaustive():
    for x in iter_levels(12):
        for y in up_neighbors(x):
            assert x in down_neighbors(y)
        for y in down_neighbors(x):
            assert x in up_neighbors(y)


def test_one_differential_exhaustive():
    for x in iter_levels(12):
        assert len(up_neighbors(x)) == len(down_neighbors(x)) + 1


@given(words_st)
def test_cover_ranks(x):
    assert all(y.rank == x.rank + 1 for y in up_neighbors(x))
    assert all(y.rank == x.rank - 1 for y in down_neighbors(x))


@given(words_st)
def test_runs_round_trip(x):
    assert runs(x).assemble() == x


@given(words_st)
def test_clocks_increasing_and_bounded(x):
    cl = clocks(x)
    betas = runs(x).betas
    assert all(a < b for a, b in zip(cl, cl[1:]))
    for k, c in enumerate(cl, start=1):
        assert c >= 2 * k - 1
        assert (c == 2 * k - 1) == all(b == 0 for b in betas[:k])


@given(words_st, words_st, words_st)
def test_concat_laws(x, y, z):
    assert concat(concat(x, y), z) == concat(x, concat(y, z))
    assert concat(x, y).rank == x.rank + y.rank
    assert x + y == concat(x, y)


@given(words_st, words_st)
def test_suffix_bounds(x, y):
    h = common_suffix_len(x, y)
    hp = common_suffix_rank(x, y)
    assert h == common_suffix_len(y, x)
    assert hp == common_suffix_rank(y, x)
    assert h <= min(len(x), len(y))
    assert hp <= min(x.rank, y.rank)
    assert common_suffix_rank(x, x) == x.rank


@given(words_st)
def test_splits_cover_all_cuts(x):
    cuts = list(splits(x))
    assert len(cuts) == len(x) + 1
    assert all(concat(a, b) == x for a, b in cuts)
