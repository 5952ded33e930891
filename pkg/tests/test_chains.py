"""Chain statistics: label sets, filtered counting, shuffles."""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from isoschub.chains import (
    ascent_set,
    chain_count,
    composition_positions,
    count_chains,
    count_f_g,
    descent_set,
    enumerate_chains,
    peak_set,
    shuffles,
    stat_counts,
)
from isoschub.orders import build_interval
from isoschub.perm import parse_cycles


def test_label_sets_on_words():
    assert peak_set((1, 3, 2)) == frozenset({2})
    assert peak_set((3, 1, 2)) == frozenset()
    assert descent_set((3, 1, 2)) == frozenset({1})
    assert ascent_set((3, 1, 2)) == frozenset({2})
    assert peak_set(()) == frozenset()


def test_equal_neighbours_are_neither_ascents_nor_descents():
    assert descent_set((1, 1)) == frozenset()
    assert ascent_set((1, 1)) == frozenset()
    assert peak_set((2, 2, 1)) == frozenset()
    assert peak_set((1, 2, 2)) == frozenset()


def test_composition_positions():
    assert composition_positions((1, 2, 1)) == frozenset({1, 3})
    assert composition_positions((4,)) == frozenset({4})
    with pytest.raises(ValueError):
        composition_positions((1, 0, 2))


def test_shuffle_count():
    assert len(shuffles((1, 2), (8, 9, 10))) == comb(5, 2)
    assert shuffles((), (5, 7)) == [(5, 7)]


def _valley(letters):
    # distinct letters arranged to be peakless: fall to the minimum, then rise
    m = min(letters)
    rest = sorted(set(letters) - {m})
    down = rest[1::2][::-1]
    up = [x for x in rest if x not in down]
    return tuple(down) + (m,) + tuple(up)


@settings(max_examples=60, deadline=None)
@given(
    st.sets(st.integers(1, 40), min_size=1, max_size=4),
    st.sets(st.integers(101, 140), min_size=1, max_size=4),
)
def test_two_peakless_words_have_two_peakless_shuffles(a, b):
    u, v = _valley(a), _valley(b)
    hits = [s for s in shuffles(u, v) if not peak_set(s)]
    assert len(hits) == 2


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 10), min_size=1, max_size=4),
    st.lists(st.integers(101, 110), min_size=1, max_size=4),
)
def test_increasing_words_have_one_increasing_shuffle(a, b):
    u, v = tuple(sorted(a)), tuple(sorted(b))
    hits = [s for s in shuffles(u, v) if not descent_set(s)]
    assert len(hits) == 1


def test_chain_enumeration_matches_counting():
    riv = build_interval(zeta=(3, -2, 4, 1), mode="reseau")
    chains = list(enumerate_chains(riv))
    assert len(chains) == 80
    assert chain_count(riv) == 80
    words = [labels for _nodes, labels in chains]
    assert len(set(words)) == 80
    for name, stat in [
        ("peakless", peak_set),
        ("no_descent", descent_set),
        ("no_ascent", ascent_set),
    ]:
        assert count_chains(riv, name) == sum(1 for w in words if not stat(w))
    for positions in [(1,), (2, 4), (1, 3), (3,)]:
        S = frozenset(positions)
        for prefix, stat in [
            ("peakset", peak_set),
            ("descentset", descent_set),
            ("ascentset", ascent_set),
        ]:
            want_sub = sum(1 for w in words if stat(w) <= S)
            want_eq = sum(1 for w in words if stat(w) == S)
            assert count_chains(riv, (f"{prefix}_subset", positions)) == want_sub
            assert count_chains(riv, (f"{prefix}_equal", positions)) == want_eq


def test_unknown_filter_is_rejected():
    iv = build_interval(zeta=(2, -1))
    with pytest.raises((KeyError, ValueError)):
        count_chains(iv, "zigzag")


def test_order_and_reseau_chain_counts():
    oiv = build_interval(zeta=(3, -2, 4, 1))
    riv = build_interval(zeta=(3, -2, 4, 1), mode="reseau")
    assert count_f_g(oiv, riv) == {"f": 5, "g": 80}


def test_stat_counts_are_internally_consistent():
    for zeta, chains_order, chains_reseau in [
        ((3, -2, 4, 1), 5, 80),
        ((2, 4, -1, 3), 3, 24),
    ]:
        so = stat_counts(build_interval(zeta=zeta))
        sr = stat_counts(build_interval(zeta=zeta, mode="reseau"))
        assert so["chains"] == chains_order
        assert sr["chains"] == chains_reseau
        assert sum(so["by_peakset"].values()) == chains_order
        assert sum(sr["by_descentset"].values()) == chains_reseau
        assert so["Pi"] == so["by_peakset"].get((), 0)
        assert sr["I"] == sr["by_descentset"].get((), 0)
        assert sr["D"] == sr["by_ascentset"].get((), 0)


def test_minimal_cycle_statistics():
    sr = stat_counts(build_interval(zeta=(2, 4, -1, 3), mode="reseau"))
    so = stat_counts(build_interval(zeta=(2, 4, -1, 3)))
    assert (so["Pi"], sr["I"], sr["D"]) == (1, 1, 1)
    assert so["by_peakset"] == {(): 1, (2,): 1, (3,): 1}


def test_increasing_chain_labels():
    zeta = parse_cycles("<1,2,5,3,4>")
    riv = build_interval(zeta=zeta, mode="reseau")
    words = {labels for _nodes, labels in enumerate_chains(riv, "no_descent")}
    assert words == {(-3, -2, -1, 5), (-3, -2, 2, 5)}
