"""Cover enumeration, the two graded orders, intervals, and transport."""

from functools import reduce

import pytest

from isoschub.orders import (
    build_interval,
    covers0_up,
    decode_left_reflection,
    grassmann_rank,
    greedy_chain,
    intervals_isomorphic,
    k_bruhat_interval,
    lagrangian_covers_up,
    lagrangian_leq,
    lagrangian_rank,
    leq0,
    transport_check,
    witness_u,
)
from isoschub.perm import (
    compose,
    epsilon_P,
    identity,
    inverse,
    iter_group,
    length,
    shape_canonical,
    sign_changes,
    t_pair,
)


def test_bottom_covers_in_rank_two():
    assert covers0_up((1, 2)) == (((-1, 2), (-1, 1), (1,)),)


def test_sign_covers_only():
    # both pair candidates above this window overshoot the length by one
    assert covers0_up((-3, 2, 1)) == (
        ((-3, -2, 1), (-2, 2), (2,)),
        ((-3, 2, -1), (-1, 1), (1,)),
    )


def test_cover_structure():
    for u in iter_group(3):
        for w, refl, labels in covers0_up(u):
            assert length(w) == length(u) + 1
            assert compose(u, t_pair(*refl, 3)) == w
            diff = [i for i in range(3) if u[i] != w[i]]
            if len(diff) == 1:
                val = u[diff[0]]
                assert val > 0 and w[diff[0]] == -val
                assert labels == (val,)
            else:
                i, j = diff
                alpha, beta = sorted((abs(u[i]), abs(u[j])))
                assert {abs(w[i]), abs(w[j])} == {alpha, beta}
                assert labels == (-alpha, beta)


def test_order_is_cover_reachability():
    group = sorted(iter_group(2))
    reach = {u: {u} for u in group}
    for u in group:
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for w, _refl, _labels in covers0_up(x):
                    if w not in reach[u]:
                        reach[u].add(w)
                        nxt.append(w)
            frontier = nxt
    for u in group:
        for w in group:
            assert leq0(u, w) == (w in reach[u])


def test_rank_is_witness_independent():
    """Every comparable pair u <= zeta.u jumps by the same amount."""
    group = sorted(iter_group(3))
    for zeta in group:
        L = lagrangian_rank(zeta)
        seen = 0
        for u in group:
            zu = compose(zeta, u)
            if leq0(u, zu):
                seen += 1
                assert length(zu) - length(u) == L
        assert seen > 0


def test_two_letter_rank_identity():
    for zeta in iter_group(3):
        assert grassmann_rank(zeta) == 2 * lagrangian_rank(zeta) - sign_changes(zeta)


def test_witness_realizes_the_rank():
    for zeta in iter_group(3):
        u = witness_u(zeta)
        zu = compose(zeta, u)
        assert leq0(u, zu)
        assert length(zu) - length(u) == lagrangian_rank(zeta)


def test_lagrangian_covers_climb_one_rank():
    for eta in iter_group(3):
        for c, refl, _labels in lagrangian_covers_up(eta, 3):
            assert lagrangian_rank(c) == lagrangian_rank(eta) + 1
            assert compose(t_pair(*refl, 3), eta) == c
            assert lagrangian_leq(eta, c)


def test_greedy_chain_rebuilds_the_element():
    for zeta in iter_group(3):
        steps = greedy_chain(zeta)
        assert len(steps) == lagrangian_rank(zeta)
        prod = identity(3)
        for pair in steps:
            prod = compose(t_pair(*pair, 3), prod)
        assert prod == zeta


def test_greedy_chain_all_sign_changes():
    # regression: a window that is negated letter by letter must terminate
    steps = greedy_chain((-1, -2, -3))
    assert len(steps) == lagrangian_rank((-1, -2, -3))


def test_interval_order_mode():
    iv = build_interval(zeta=(2, -1))
    assert iv.kind == "lagrangian" and iv.mode == "order"
    assert iv.rank_of == {(1, 2): 0, (2, 1): 1, (2, -1): 2}
    assert iv.span == 2
    assert iv.bottom == (1, 2) and iv.top == (2, -1)
    assert iv.edges[(1, 2)] == (((2, 1), 2),)
    assert iv.edges[(2, 1)] == (((2, -1), 1),)


def test_interval_reseau_mode():
    iv = build_interval(zeta=(2, -1), mode="reseau")
    assert iv.edges[(1, 2)] == (((2, 1), -1), ((2, 1), 2))
    assert iv.edges[(2, 1)] == (((2, -1), 1),)


def test_interval_between_windows():
    iv = build_interval(u=(-1, 2), w=(-2, -1))
    assert iv.kind == "zero_bruhat"
    assert iv.span == 2
    ziv = build_interval(zeta=(2, -1))
    assert intervals_isomorphic(iv, ziv, labeled=True)


def test_interval_rejects_incomparable_windows():
    with pytest.raises(ValueError):
        build_interval(u=(1, 2), w=(2, 1))


def test_interval_node_cap(monkeypatch):
    monkeypatch.setenv("ISOSCHUB_MAX_NODES", "3")
    with pytest.raises(RuntimeError):
        build_interval(zeta=(3, -2, 4, 1))


def test_transport_across_relabelling():
    u, w = (-1, 2), (-2, -1)
    canon, _supp = shape_canonical(compose(w, inverse(u)))
    xi = epsilon_P(canon, (1, 3))
    x = witness_u(xi)
    z = compose(xi, x)
    assert transport_check(u, w, x, z)


def test_equal_quotients_need_not_transport():
    u, w = (3, -2, 1, 4), (3, -4, 1, 2)
    x, z = (1, -2, 4, 3), (1, -4, 2, 3)
    assert compose(w, inverse(u)) == compose(z, inverse(x))
    assert not intervals_isomorphic(k_bruhat_interval(u, w, 1), k_bruhat_interval(x, z, 1))


def test_decode_left_reflection():
    assert decode_left_reflection(t_pair(-2, 2, 3)) == (2, 2)
    assert decode_left_reflection(t_pair(1, 3, 3)) == (1, 3)
    with pytest.raises(ValueError):
        decode_left_reflection(t_pair(-1, 3, 3))
