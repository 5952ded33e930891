"""Expansion of Q-polynomials into monomials in the one-row generators.

Q_(r,s) = q_r q_s + 2 * sum_{i=1..s} (-1)^i q_{r+i} q_{s-i} with q_0 = 1,
and longer indexes reduce by first-row Pfaffian expansion, padding odd
length with a single zero part.  A polynomial is a dict mapping a weakly
decreasing tuple of positive q-indices to an integer coefficient.
"""

from __future__ import annotations

from functools import cache
from typing import Sequence

__all__ = [
    "lr_coefficient",
    "q_expansion",
    "qpoly_to_json",
    "qpoly_mul",
    "qpoly_scale",
    "validate_strict",
]

Monomial = tuple[int, ...]
QPoly = dict[Monomial, int]


def validate_strict(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(a <= b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a strict partition: {lam!r}")
    return lam


def _add_into(acc: QPoly, poly: QPoly, scale: int = 1) -> None:
    for mono, c in poly.items():
        new = acc.get(mono, 0) + scale * c
        if new:
            acc[mono] = new
        else:
            acc.pop(mono, None)


def qpoly_mul(A: QPoly, B: QPoly) -> QPoly:
    out: QPoly = {}
    for ma, ca in A.items():
        for mb, cb in B.items():
            mono = tuple(sorted(ma + mb, reverse=True))
            new = out.get(mono, 0) + ca * cb
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
    return out


def qpoly_scale(A: QPoly, c: int) -> QPoly:
    if c == 0:
        return {}
    return {m: c * v for m, v in A.items()}


def _two_row(r: int, s: int) -> QPoly:
    """Q_(r,s) with r > s >= 0; s = 0 degenerates to the single generator."""
    if s == 0:
        return {(r,): 1}
    out: QPoly = {(r, s): 1}
    for i in range(1, s + 1):
        mono = (r + i,) if s - i == 0 else (r + i, s - i)
        _add_into(out, {mono: 1}, 2 * (-1) ** i)
    return out


@cache
def _pf(lam: tuple[int, ...]) -> tuple[tuple[Monomial, int], ...]:
    if len(lam) == 0:
        return (((), 1),)
    if len(lam) % 2 == 1:
        lam = lam + (0,)
    if len(lam) == 2:
        return tuple(sorted(_two_row(*lam).items()))
    out: QPoly = {}
    first = lam[0]
    for j in range(1, len(lam)):
        rest = lam[1:j] + lam[j + 1 :]
        head = _two_row(first, lam[j])
        tail = dict(_pf(rest))
        _add_into(out, qpoly_mul(head, tail), (-1) ** (j + 1))
    return tuple(sorted(out.items()))


def q_expansion(lam: Sequence[int]) -> QPoly:
    """Write Q_lam as an integer combination of q-monomials.

    >>> q_expansion((2, 1))
    {(2, 1): 1, (3,): -2}
    """
    lam = validate_strict(lam)
    return dict(_pf(lam))


def qpoly_to_json(poly: QPoly) -> list[dict]:
    return [
        {"monomial": list(mono), "coeff": poly[mono]} for mono in sorted(poly)
    ]


def lr_coefficient(
    mu: Sequence[int], lam: Sequence[int], kappa: Sequence[int], kind: str = "Q"
) -> int:
    """Coefficient of the kappa term in a product of two P- or Q-functions.

    Pulled out of the flag-manifold structure constants at a rank where the
    ambient space no longer truncates, n = kappa_1 + 1.
    """
    if kind not in ("P", "Q"):
        raise ValueError(f"kind must be 'P' or 'Q', not {kind!r}")
    mu = tuple(mu)
    lam = validate_strict(lam)
    kappa = tuple(kappa)
    if mu:
        validate_strict(mu)
    if kappa:
        validate_strict(kappa)
    if sum(mu) + sum(lam) != sum(kappa):
        return 0
    from .perm import v_of
    from .schubert import structure_constant

    n = (kappa[0] if kappa else 1) + 1
    basis = "C" if kind == "Q" else "B"
    u = v_of(mu, n)
    w = v_of(kappa, n)
    return structure_constant(u, w, lam, basis)
