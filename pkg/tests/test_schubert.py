"""Basis multiplication: special classes against window classes."""

import pytest

from isoschub.perm import identity, iter_group, length
from isoschub.schubert import (
    chevalley,
    multiply_q_monomial,
    pieri,
    structure_constant,
    symmetry_suite,
    vector_to_json,
)

DEG2_B = {(-3, -2, 1): 2, (2, -3, 1): 1, (3, -2, -1): 1, (-1, -3, 2): 1}
DEG2_C = {(-3, -2, 1): 2, (2, -3, 1): 2, (3, -2, -1): 1, (-1, -3, 2): 1}


@pytest.mark.parametrize("method", ["chains", "minimal"])
def test_degree_two_products(method):
    assert pieri((3, -1, 2), 2, "B", method) == DEG2_B
    assert pieri((3, -1, 2), 2, "C", method) == DEG2_C


def test_basis_conversion_is_a_two_power():
    for w in DEG2_B:
        q, r = divmod(DEG2_C[w], DEG2_B[w])
        assert r == 0 and q & (q - 1) == 0


def test_chevalley_is_the_degree_one_product():
    assert chevalley((2, -1), "C") == {(-2, -1): 1, (1, -2): 2}
    for u in [(1, 2, 3), (3, -1, 2), (-2, 1, 3)]:
        for basis in ("B", "C"):
            assert chevalley(u, basis) == pieri(u, 1, basis)


def test_degrees_add():
    for u in [(1, 2, 3), (2, -1, 3)]:
        base = length(u)
        for m in (1, 2):
            for w in pieri(u, m, "C"):
                assert length(w) == base + m


def test_oversized_special_class_vanishes():
    assert multiply_q_monomial(identity(2), (3,)) == {}
    assert pieri((1, 2), 3, "C") == {}


def test_monomial_order_does_not_matter():
    v = identity(3)
    assert multiply_q_monomial(v, (2, 1)) == multiply_q_monomial(v, (1, 2))


def test_structure_constants_match_the_products():
    u = (3, -1, 2)
    for w, coeff in DEG2_C.items():
        assert structure_constant(u, w, (2,), "C") == coeff
    for w, coeff in DEG2_B.items():
        assert structure_constant(u, w, (2,), "B") == coeff


def test_structure_constants_vanish_off_support():
    u = (3, -1, 2)
    for w in iter_group(3):
        if w not in DEG2_C:
            assert structure_constant(u, w, (2,), "C") == 0


def test_vector_json():
    assert vector_to_json({(1, -2): 3}, "B", 2) == {
        "basis": "B",
        "n": 2,
        "terms": [{"perm": "1,-2", "coeff": 3}],
    }


def test_symmetry_suite_reports_ok():
    rep = symmetry_suite((2, -1), (1,))
    assert rep["ok"] is True
    assert rep["a_witnesses"]["ok"] and rep["b_rho"]["ok"]
    assert rep["e_skew"] == {"ok": True, "kappa": (2,), "mu": ()}
