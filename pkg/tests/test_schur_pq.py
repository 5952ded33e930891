"""Straightened expansions, monomial arithmetic, and the LR coefficients."""

import pytest

from isoschub.schur_pq import (
    lr_coefficient,
    q_expansion,
    qpoly_mul,
    qpoly_scale,
    qpoly_to_json,
    validate_strict,
)


def test_one_row_expansions_are_monomials():
    for m in range(1, 7):
        assert q_expansion((m,)) == {(m,): 1}


def test_two_row_straightening():
    assert q_expansion((2, 1)) == {(2, 1): 1, (3,): -2}


def test_expansions_require_strict_partitions():
    for bad in [(2, 2), (1, 2), (0,), (3, -1)]:
        with pytest.raises(ValueError):
            validate_strict(bad)
        with pytest.raises(ValueError):
            q_expansion(bad)


def test_monomial_product_concatenates():
    assert qpoly_mul({(2, 1): 1}, {(1,): 1}) == {(2, 1, 1): 1}
    assert qpoly_mul({(2,): 1, (1, 1): -1}, {(1,): 3}) == {(2, 1): 3, (1, 1, 1): -3}
    assert qpoly_mul({}, {(1,): 1}) == {}


def test_scale():
    assert qpoly_scale({(2, 1): 2}, 3) == {(2, 1): 6}
    assert qpoly_scale({(2, 1): 2}, 0) == {}


def test_json_form():
    assert qpoly_to_json({(2, 1): 1, (3,): -2}) == [
        {"monomial": [2, 1], "coeff": 1},
        {"monomial": [3], "coeff": -2},
    ]


def test_product_coefficients():
    assert lr_coefficient((1,), (2,), (3,)) == 2
    assert lr_coefficient((1,), (2,), (2, 1)) == 1
    assert lr_coefficient((1,), (2,), (3,), kind="P") == 1
    assert lr_coefficient((1,), (2,), (2, 1), kind="P") == 1


def test_product_coefficient_edge_cases():
    assert lr_coefficient((), (2,), (2,)) == 1
    assert lr_coefficient((), (2,), (1,)) == 0
    # degrees must balance
    assert lr_coefficient((1,), (2,), (4,)) == 0


def _strict(total, biggest):
    if total == 0:
        yield ()
        return
    for part in range(min(total, biggest), 0, -1):
        for rest in _strict(total - part, part - 1):
            yield (part,) + rest


def test_product_coefficients_are_symmetric():
    lams = [lam for k in range(1, 5) for lam in _strict(k, k)]
    for mu in lams:
        for lam in lams:
            if sum(mu) + sum(lam) > 5:
                continue
            for kappa in _strict(sum(mu) + sum(lam), sum(mu) + sum(lam)):
                assert lr_coefficient(mu, lam, kappa) == lr_coefficient(lam, mu, kappa)
