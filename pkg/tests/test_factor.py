"""Cycle notation, irreducible factorizations, and the theta/chi multiplicities."""

from functools import reduce

import pytest

from isoschub.factor import (
    classify,
    delta,
    format_cycles,
    irreducible_factors,
    skew_shape,
    spm_cycles,
)
from isoschub.orders import lagrangian_rank
from isoschub.perm import compose, identity, iter_group, parse_cycles, support


def test_cycle_notation_round_trip():
    for w in iter_group(3):
        assert parse_cycles(f"{format_cycles(w)} n=3") == w
    assert format_cycles(identity(3)) == ""
    assert format_cycles((3, -2, 4, 1)) == "<1,3,4><2]"


def test_cycle_tags():
    assert spm_cycles((2, 1, -3)) == [((1, 2), "paired"), ((3, -3), "self_mirrored")]
    assert delta((2, 1)) == 1
    assert delta((2, -1)) == 0
    assert delta((3, -2, 4, 1)) == 0


@pytest.mark.parametrize(
    "text, want",
    [
        ("<1,2><3]", {"delta": 0, "is_minimal": True, "theta": 2, "chi": 2}),
        ("<1,3,2>", {"delta": 1, "is_minimal": True, "theta": 1, "chi": 2}),
        ("<1,2]", {"delta": 0, "is_minimal": True, "theta": 1, "chi": 1}),
        ("<1,3]", {"delta": 0, "is_minimal": True, "theta": 1, "chi": 1}),
        ("<1,3,4><2]", {"delta": 0, "is_minimal": False, "theta": 0, "chi": 0}),
        ("<1,2,4,3]", {"delta": 0, "is_minimal": True, "theta": 1, "chi": 1}),
    ],
)
def test_classification(text, want):
    assert classify(parse_cycles(text)) == want


def test_identity_factorization():
    fac = irreducible_factors(identity(3))
    assert fac.factors == ()
    assert (fac.theta, fac.chi) == (1, 1)


@pytest.mark.parametrize("text", ["<1,2><3]", "<1,3,4><2]", "<1,2,4,3]", "<1,4><2,3]"])
def test_factors_multiply_back(text):
    zeta = parse_cycles(f"{text} n=4")
    fac = irreducible_factors(zeta)
    prod = reduce(compose, (f.window for f in fac.factors), identity(4))
    assert prod == zeta
    assert sum(lagrangian_rank(f.window) for f in fac.factors) == lagrangian_rank(zeta)
    supports = [support(f.window) for f in fac.factors]
    flat = [a for s in supports for a in s]
    assert len(flat) == len(set(flat))


def test_multiplicities_come_from_the_factors():
    fac = irreducible_factors(parse_cycles("<1,2><3] n=3"))
    k = len(fac.factors)
    assert all(f.minimal for f in fac.factors)
    assert fac.theta == 2 ** (k - 1)
    assert fac.chi == 2 ** sum(f.delta for f in fac.factors)


def test_skew_shapes():
    assert skew_shape((3, -2, 4, 1)) == ((4, 3, 2), (3, 1))
    assert skew_shape(parse_cycles("<1,2,4,3] n=4")) == ((4, 2, 1), (2, 1))
    assert skew_shape(identity(3)) == ((), ())
    assert skew_shape((-3, -1, -2)) is None


def test_skew_shape_sizes_match_the_rank():
    for zeta in iter_group(3):
        pair = skew_shape(zeta)
        if pair is None:
            continue
        kappa, mu = pair
        assert sum(kappa) - sum(mu) == lagrangian_rank(zeta)
