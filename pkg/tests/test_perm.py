"""Window-level algebra: parsing, composition, lengths, reflections."""

import pytest
from hypothesis import given, strategies as st

from isoschub.perm import (
    act,
    all_left_reflections,
    compose,
    embed,
    epsilon_P,
    epsilon_pq,
    format_one_line,
    gamma,
    identity,
    inverse,
    iota,
    is_grassmannian,
    iter_group,
    iter_plain,
    length,
    omega0,
    parse,
    parse_cycles,
    parse_one_line,
    partition_of,
    rho,
    shape_canonical,
    sign_changes,
    slash_p,
    spm_inversions,
    support,
    t_pair,
    trim,
    v_of,
)


def _signed(n):
    return st.builds(
        lambda p, s: tuple(a * b for a, b in zip(p, s)),
        st.permutations(tuple(range(1, n + 1))),
        st.tuples(*(st.sampled_from((1, -1)),) * n),
    )


windows = st.integers(2, 5).flatmap(_signed)


@given(windows)
def test_one_line_round_trip(w):
    assert parse_one_line(format_one_line(w)) == w


def test_parse_dispatches_both_notations():
    assert parse("3,-1,2") == (3, -1, 2)
    assert parse("<1,3,4><2] n=4") == (3, -2, 4, 1)
    assert parse("<1,2,4,3> n=4") == (2, 4, 1, 3)


@pytest.mark.parametrize("text", ["1,1", "0,1", "3,1", "2,-2,3,5"])
def test_parse_one_line_rejects_bad_windows(text):
    with pytest.raises(ValueError):
        parse_one_line(text)


def test_parse_cycles_infers_rank_from_largest_letter():
    assert parse_cycles("<1,2>") == (2, 1)
    assert parse_cycles("<1,2> n=4") == (2, 1, 3, 4)


@given(windows)
def test_group_axioms(w):
    n = len(w)
    assert compose(w, inverse(w)) == identity(n)
    assert compose(inverse(w), w) == identity(n)
    assert inverse(inverse(w)) == w


@given(windows, st.data())
def test_act_is_sign_equivariant(w, data):
    a = data.draw(st.integers(1, len(w)))
    assert act(w, a) == w[a - 1]
    assert act(w, -a) == -w[a - 1]


def _pair_length(w):
    # inversions plus pairs (i <= j) whose window values sum negative
    n = len(w)
    inv = sum(w[i] > w[j] for i in range(n) for j in range(i + 1, n))
    neg = sum(w[i] + w[j] < 0 for i in range(n) for j in range(i, n))
    return inv + neg


@given(windows)
def test_length_matches_pair_count(w):
    assert length(w) == _pair_length(w)


def test_longest_element():
    assert omega0(3) == (-1, -2, -3)
    assert length(omega0(3)) == 9
    assert length(identity(4)) == 0


@given(windows)
def test_two_letter_inversion_count(w):
    assert spm_inversions(w) == 2 * length(w) - sign_changes(w)


def test_two_letter_inversion_value():
    assert spm_inversions((2, 4, -3, -1)) == 14


def test_reflection_windows():
    assert t_pair(-2, 2, 3) == (1, -2, 3)
    assert t_pair(1, 3, 3) == (3, 2, 1)
    assert t_pair(-1, 3, 3) == (-3, 2, -1)
    # the two crossed spellings name the same reflection
    assert t_pair(-1, 3, 3) == t_pair(-3, 1, 3)


def test_left_reflections_are_involutions():
    refls = all_left_reflections(3)
    assert len(refls) == 9
    assert len(set(refls)) == 9
    for t in refls:
        assert t != identity(3)
        assert compose(t, t) == identity(3)


@given(windows)
def test_embed_then_trim(w):
    n = len(w)
    big = embed(w, n + 2)
    assert big[:n] == w and big[n:] == (n + 1, n + 2)
    assert trim(big) == trim(w)


def test_insertion_example():
    assert epsilon_pq((-2, 3, 4, 1), 3, -2) == (-3, 4, -2, 5, 1)


def test_insertion_inverts_deletion():
    for w in iter_group(3):
        for p in range(1, 4):
            assert epsilon_pq(slash_p(w, p), p, w[p - 1]) == w


def test_relabelling_keeps_canonical_shape():
    w = (3, -2, 4, 1)
    canon, supp = shape_canonical(w)
    assert supp == support(w)
    relabeled = epsilon_P(canon, (2, 5, 6, 9))
    assert shape_canonical(relabeled)[0] == canon


def test_support_skips_fixed_letters():
    assert support((1, -3, 2)) == (2, 3)
    assert support(identity(4)) == ()


@pytest.mark.parametrize(
    "lam", [(1,), (2,), (2, 1), (3,), (3, 1), (3, 2), (3, 2, 1), (4, 2)]
)
def test_grassmannian_round_trip(lam):
    v = v_of(lam, 5)
    assert is_grassmannian(v)
    assert partition_of(v) == tuple(lam)


def test_grassmannian_windows():
    assert v_of((2, 1), 3) == (-2, -1, 3)
    assert not is_grassmannian((2, 1, 3))


def test_plain_windows_embed_unchanged():
    assert iota((2, 3, 1)) == (2, 3, 1)
    with pytest.raises(ValueError):
        iota((2, -1, 3))
    plains = list(iter_plain(3))
    assert len(plains) == 6
    assert all(min(w) > 0 for w in plains)


def test_conjugators():
    assert rho(4) == (-4, -3, -2, -1)
    assert compose(rho(4), rho(4)) == identity(4)
    assert gamma(4) == (2, 3, 4, 1)


def test_group_enumeration():
    group = list(iter_group(3))
    assert len(group) == 48
    assert len(set(group)) == 48
    assert identity(3) in group and omega0(3) in group
